#pragma once

#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

#include "dtuples/errors.hpp"
#include "dtuples/gaussian.hpp"

namespace dtuples {

// Dense univariate polynomial over Q(i). coeff(k) is the coefficient of the
// k-th power; the stored vector carries no trailing zeros, and the zero
// polynomial is the empty vector (degree -1).
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(GaussianRational c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    explicit UniPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<GaussianRational> coeffs)
        : c_(coeffs.begin(), coeffs.end()) {
        trim();
    }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return UniPoly(GaussianRational(1)); }
    // x^k
    static UniPoly monomial(int k, GaussianRational c = GaussianRational(1)) {
        UniPoly p;
        if (!c.is_zero()) {
            p.c_.assign(static_cast<std::size_t>(k) + 1, GaussianRational());
            p.c_.back() = std::move(c);
        }
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const GaussianRational& coeff(int k) const {
        static const GaussianRational kZero{};
        if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
        return c_[static_cast<std::size_t>(k)];
    }
    const std::vector<GaussianRational>& coeffs() const { return c_; }

    const GaussianRational& leading() const {
        if (is_zero()) throw DomainError(Errc::ZeroPolynomial, "zero polynomial has no leading coefficient");
        return c_.back();
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<GaussianRational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < r.size(); ++k)
            r[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<GaussianRational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < r.size(); ++k)
            r[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a) {
        std::vector<GaussianRational> r(a.c_);
        for (auto& c : r) c = -c;
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<GaussianRational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const GaussianRational& s) {
        if (s.is_zero()) return UniPoly();
        std::vector<GaussianRational> r(a.c_);
        for (auto& c : r) c *= s;
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const GaussianRational& s, const UniPoly& a) { return a * s; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // multiply by x^k
    UniPoly shifted(int k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<GaussianRational> r(c_.size() + static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + static_cast<std::size_t>(k)] = c_[i];
        return UniPoly(std::move(r));
    }

    UniPoly pow(unsigned long e) const {
        UniPoly r = one();
        UniPoly base = *this;
        while (e) {
            if (e & 1) r = r * base;
            if (e >>= 1) base = base * base;
        }
        return r;
    }

    struct DivMod;

    // Field division: a = quot*b + rem with deg rem < deg b.
    static DivMod divmod(const UniPoly& a, const UniPoly& b);

    // Quotient when the division is exact; nullopt-like failure is reported
    // by returning false.
    static bool exact_div(const UniPoly& a, const UniPoly& b, UniPoly& out);

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<GaussianRational> r(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * GaussianRational(static_cast<long>(k));
        return UniPoly(std::move(r));
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return *this * (GaussianRational(1) / leading());
    }

    GaussianRational eval(const GaussianRational& x) const {
        GaussianRational r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    std::complex<double> eval(const std::complex<double>& x) const {
        std::complex<double> r = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->to_complex();
        return r;
    }

    std::vector<std::complex<double>> to_complex_coeffs() const {
        std::vector<std::complex<double>> r;
        r.reserve(c_.size());
        for (const auto& c : c_) r.push_back(c.to_complex());
        return r;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<GaussianRational> c_;
};

struct UniPoly::DivMod {
    UniPoly quot;
    UniPoly rem;
};

inline UniPoly::DivMod UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DomainError(Errc::ZeroPolynomial, "division by zero polynomial");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<GaussianRational> rem = a.c_;
    std::vector<GaussianRational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const GaussianRational& lb = b.leading();
    for (int k = a.degree(); k >= b.degree(); --k) {
        GaussianRational q = rem[static_cast<std::size_t>(k)] / lb;
        if (q.is_zero()) continue;
        quot[static_cast<std::size_t>(k - b.degree())] = q;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<std::size_t>(k - b.degree() + j)] -= q * b.coeff(j);
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

inline bool UniPoly::exact_div(const UniPoly& a, const UniPoly& b, UniPoly& out) {
    if (a.is_zero()) {
        out = UniPoly();
        return true;
    }
    if (b.is_zero()) return false;
    DivMod d = divmod(a, b);
    if (!d.rem.is_zero()) return false;
    out = std::move(d.quot);
    return true;
}

// Monic greatest common divisor over the field Q(i). gcd(0, p) = monic p;
// both zero is an error.
inline UniPoly unipoly_gcd(UniPoly a, UniPoly b) {
    if (a.is_zero() && b.is_zero())
        throw DomainError(Errc::BothZero, "gcd of two zero polynomials");
    while (!b.is_zero()) {
        UniPoly r = UniPoly::divmod(a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace dtuples
