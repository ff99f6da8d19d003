#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <string>
#include <utility>

#include "dtuples/errors.hpp"

namespace dtuples {

using BigInt = boost::multiprecision::cpp_int;
// Always kept in lowest terms with positive denominator (canonical form of
// the backend).
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
    return q.str();
}

inline double to_double(const Rational& q) {
    return q.convert_to<double>();
}

// Element of Q(i): re + im*i with exact rational parts. A field; all
// operations below are exact.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r) {}
    GaussianRational(long r, long i) : re(r), im(i) {}

    static GaussianRational unit_i() { return GaussianRational(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    // |z|^2, exact.
    Rational norm2() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw DomainError(Errc::ZeroDenominator, "division by zero");
        Rational n = b.norm2();
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }

inline GaussianRational pow(GaussianRational base, unsigned long e) {
    GaussianRational r(1);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Canonical display form: "0", "3", "-1/2", "i", "-i", "2i", "1+6i", "3-5i",
// "1/2-3/4i". Re-parseable by the expression grammar when wrapped in
// parentheses.
inline std::string to_string(const GaussianRational& z) {
    auto im_part = [](const Rational& v) -> std::string {
        if (v == 1) return "i";
        if (v == -1) return "-i";
        return to_string(v) + "i";
    };
    if (z.im == 0) return to_string(z.re);
    if (z.re == 0) return im_part(z.im);
    std::string s = to_string(z.re);
    if (z.im > 0) s += "+";
    s += im_part(z.im);
    return s;
}

}  // namespace dtuples
