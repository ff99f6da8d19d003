#pragma once

#include <cctype>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "dtuples/classify.hpp"
#include "dtuples/correspondence.hpp"
#include "dtuples/errors.hpp"
#include "dtuples/factorize.hpp"
#include "dtuples/gaussian.hpp"
#include "dtuples/oracle.hpp"
#include "dtuples/symmetry.hpp"

namespace dtuples {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline std::string bigint_str(const BigInt& n) { return n.str(); }

inline BigInt bigint_from_decimal(const std::string& s) {
    std::size_t k = 0;
    if (k < s.size() && (s[k] == '-' || s[k] == '+')) ++k;
    if (k == s.size())
        throw DomainError(Errc::UnsupportedCoefficient, "empty integer string");
    for (; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw DomainError(Errc::UnsupportedCoefficient,
                              "integer string contains non-decimal character: " + s);
    return BigInt(s);
}

inline ordered_json rational_to_json(const Rational& r) {
    return ordered_json{{"num", bigint_str(numerator(r))}, {"den", bigint_str(denominator(r))}};
}

inline Rational rational_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_string() ||
        !j["den"].is_string())
        throw DomainError(Errc::UnsupportedCoefficient,
                          "rational must be {\"num\": string, \"den\": string}");
    const BigInt num = bigint_from_decimal(j["num"].get<std::string>());
    const BigInt den = bigint_from_decimal(j["den"].get<std::string>());
    if (den == 0) throw DomainError(Errc::UnsupportedCoefficient, "zero denominator");
    // Divide instead of using the two-argument constructor: the latter
    // rejects negative denominators outright.
    return Rational(num) / Rational(den);
}

// Deterministic float rendering for text reports.
inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace detail

// Matrix document: {"d": n, "entries": [[entry,...],...]} in the display
// layout (entries[r][c] = coefficient of x^(d-r) y^(d-c), top-left = x^d
// y^d), each entry {"re": {"num","den"}, "im": {"num","den"}} with
// arbitrary-precision decimal strings. Round-trips losslessly; dumping the
// same correspondence always yields identical bytes.
inline ordered_json save_matrix(const Correspondence& f) {
    const int d = f.d();
    ordered_json entries = ordered_json::array();
    for (int r = 0; r <= d; ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c <= d; ++c) {
            const GaussianRational& a = f.coeff(d - r, d - c);
            row.push_back(ordered_json{{"re", detail::rational_to_json(a.re)},
                                       {"im", detail::rational_to_json(a.im)}});
        }
        entries.push_back(std::move(row));
    }
    return ordered_json{{"d", d}, {"entries", std::move(entries)}};
}

inline Correspondence load_matrix(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("d") || !doc.contains("entries") ||
        !doc["d"].is_number_integer())
        throw DomainError(Errc::UnsupportedCoefficient,
                          "matrix document must be {\"d\": int, \"entries\": [[...]]}");
    const long long d = doc["d"].get<long long>();
    if (d < 1 || d > 4096)
        throw DomainError(Errc::DegreeOverflow, "declared degree out of range");
    const auto& entries = doc["entries"];
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(d) + 1)
        throw DomainError(Errc::DegreeOverflow, "entries must be a (d+1) x (d+1) array");
    std::vector<std::vector<GaussianRational>> grid(
        static_cast<std::size_t>(d) + 1, std::vector<GaussianRational>(static_cast<std::size_t>(d) + 1));
    for (std::size_t r = 0; r < entries.size(); ++r) {
        const auto& row = entries[r];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(d) + 1)
            throw DomainError(Errc::DegreeOverflow, "entries must be a (d+1) x (d+1) array");
        for (std::size_t c = 0; c < row.size(); ++c) {
            const auto& e = row[c];
            if (!e.is_object() || !e.contains("re") || !e.contains("im"))
                throw DomainError(Errc::UnsupportedCoefficient,
                                  "entry must be {\"re\": rational, \"im\": rational}");
            GaussianRational v(detail::rational_from_json(e["re"]),
                               detail::rational_from_json(e["im"]));
            // display layout -> (x-power, y-power)
            grid[static_cast<std::size_t>(d) - r][static_cast<std::size_t>(d) - c] = std::move(v);
        }
    }
    return Correspondence::from_grid(grid);
}

// --- display strings -------------------------------------------------------

namespace detail {

inline std::string rational_expr(const Rational& r) {
    std::string s = bigint_str(numerator(r));
    if (denominator(r) != 1) s += "/" + bigint_str(denominator(r));
    return s;
}

// Renders a coefficient in the expression grammar itself (explicit '*', so
// 2i prints as "2*i"); printed polynomials re-parse to the same values.
inline std::string gaussian_expr(const GaussianRational& c) {
    if (c.is_zero()) return "0";
    std::string im;
    if (!c.im.is_zero()) {
        if (c.im == Rational(1))
            im = "i";
        else if (c.im == Rational(-1))
            im = "-i";
        else
            im = rational_expr(c.im) + "*i";
    }
    if (c.re.is_zero()) return im;
    std::string out = rational_expr(c.re);
    if (!im.empty()) out += (im[0] == '-') ? "-" + im.substr(1) : "+" + im;
    return out;
}

}  // namespace detail

// "x^3 - 2*x + 1/2" style rendering in the input grammar; the output
// re-parses to the same polynomial.
inline std::string poly_to_string(const UniPoly& p, char var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const GaussianRational& c = p.coeff(k);
        if (c.is_zero()) continue;
        const std::string cs = detail::gaussian_expr(c);
        const bool composite = !c.re.is_zero() && !c.im.is_zero();
        std::string term;
        bool negative = false;
        if (k == 0) {
            if (composite)
                term = "(" + cs + ")";
            else if (cs[0] == '-') {
                negative = true;
                term = cs.substr(1);
            } else
                term = cs;
        } else {
            std::string varpow(1, var);
            if (k > 1) varpow += "^" + std::to_string(k);
            if (c == GaussianRational(1))
                term = varpow;
            else if (c == GaussianRational(-1)) {
                negative = true;
                term = varpow;
            } else if (composite)
                term = "(" + cs + ")*" + varpow;
            else if (cs[0] == '-') {
                negative = true;
                term = cs.substr(1) + "*" + varpow;
            } else
                term = cs + "*" + varpow;
        }
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += negative ? " - " + term : " + " + term;
    }
    return out;
}

inline std::string map_to_string(const FractionalMap& m, char var) {
    return "(" + poly_to_string(m.num(), var) + ") / (" + poly_to_string(m.den(), var) + ")";
}

inline std::string sphere_point_to_string(const SpherePoint& p) {
    if (p.infinite) return "inf";
    return detail::fmt_double(p.z.real()) + (p.z.imag() < 0 ? " - " : " + ") +
           detail::fmt_double(std::abs(p.z.imag())) + "i";
}

// --- report JSON -----------------------------------------------------------

inline ordered_json factorization_to_json(const Factorization& fact) {
    return ordered_json{
        {"phi", {{"num", poly_to_string(fact.phi.num(), 'x')}, {"den", poly_to_string(fact.phi.den(), 'x')}}},
        {"psi", {{"num", poly_to_string(fact.psi.num(), 'y')}, {"den", poly_to_string(fact.psi.den(), 'y')}}}};
}

inline ordered_json classification_to_json(const Classification& cls) {
    if (cls.is_rank2()) {
        const auto& r = cls.rank2();
        return ordered_json{{"kind", "rank2"},
                            {"factorization", factorization_to_json(r.factorization)},
                            {"scale", to_string(r.scale)}};
    }
    if (cls.is_perfect_power()) {
        const auto& r = cls.perfect_power();
        return ordered_json{{"kind", "perfect_power"},
                            {"exponent", r.exponent},
                            {"scale", to_string(r.scale)},
                            {"base_degree", r.base.d()},
                            {"base", classification_to_json(*r.base_classification)}};
    }
    return ordered_json{{"kind", "not_map_of_tuples"}, {"rank", cls.negative().rank}};
}

inline ordered_json symmetry_to_json(const SymmetryReport& rep) {
    ordered_json j;
    j["symmetric"] = rep.symmetric;
    j["swap_scalar"] = rep.swap_scalar ? ordered_json(to_string(*rep.swap_scalar)) : ordered_json(nullptr);
    j["real_up_to_constant"] = rep.real_up_to_constant;
    j["real_witness"] =
        rep.real_witness ? ordered_json(to_string(*rep.real_witness)) : ordered_json(nullptr);
    j["hermitian_up_to_unimodular"] =
        rep.hermitian_unimodular ? ordered_json(to_string(*rep.hermitian_unimodular)) : ordered_json(nullptr);
    return j;
}

inline ordered_json witness_to_json(const TupleWitness& w) {
    ordered_json fwd = ordered_json::array();
    for (const auto& p : w.forward.points) fwd.push_back(sphere_point_to_string(p));
    return ordered_json{{"start", sphere_point_to_string(w.start)},
                        {"forward_fiber", std::move(fwd)},
                        {"max_mismatch", w.max_mismatch},
                        {"ok", w.verdict}};
}

inline ordered_json oracle_to_json(const OracleVerdict& v) {
    ordered_json j;
    j["pass"] = v.pass;
    j["samples_used"] = v.samples_used;
    j["samples_rejected"] = v.samples_rejected;
    ordered_json w = ordered_json::array();
    if (v.worst) w.push_back(witness_to_json(*v.worst));
    j["witnesses"] = std::move(w);
    return j;
}

}  // namespace dtuples
