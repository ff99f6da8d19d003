#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dtuples/errors.hpp"
#include "dtuples/gaussian.hpp"
#include "dtuples/unipoly.hpp"

namespace dtuples {

// Bivariate polynomial over Q(i), stored as its expansion in powers of y:
// slice(j) is the coefficient of y^j, a UniPoly in x. No trailing zero
// slices; the zero polynomial has no slices.
class BiPoly {
  public:
    BiPoly() = default;
    explicit BiPoly(std::vector<UniPoly> y_slices) : s_(std::move(y_slices)) { trim(); }
    explicit BiPoly(const GaussianRational& c) {
        if (!c.is_zero()) s_.push_back(UniPoly(c));
    }

    static BiPoly zero() { return BiPoly(); }
    static BiPoly one() { return BiPoly(GaussianRational(1)); }
    // c * x^i * y^j
    static BiPoly monomial(int i, int j, GaussianRational c = GaussianRational(1)) {
        if (c.is_zero()) return BiPoly();
        std::vector<UniPoly> s(static_cast<std::size_t>(j) + 1);
        s.back() = UniPoly::monomial(i, std::move(c));
        return BiPoly(std::move(s));
    }
    static BiPoly var_x() { return monomial(1, 0); }
    static BiPoly var_y() { return monomial(0, 1); }

    bool is_zero() const { return s_.empty(); }
    bool is_constant() const { return degree_x() <= 0 && degree_y() <= 0; }
    int degree_y() const { return static_cast<int>(s_.size()) - 1; }
    int degree_x() const {
        int d = -1;
        for (const auto& p : s_) d = std::max(d, p.degree());
        return d;
    }

    const UniPoly& slice(int j) const {
        static const UniPoly kZero{};
        if (j < 0 || j >= static_cast<int>(s_.size())) return kZero;
        return s_[static_cast<std::size_t>(j)];
    }
    const std::vector<UniPoly>& slices() const { return s_; }

    // coefficient of x^i y^j
    const GaussianRational& coeff(int i, int j) const { return slice(j).coeff(i); }

    // leading coefficient with respect to y (a UniPoly in x)
    const UniPoly& lead_y() const {
        if (is_zero()) throw DomainError(Errc::ZeroPolynomial, "zero polynomial has no leading slice");
        return s_.back();
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        std::vector<UniPoly> r(std::max(a.s_.size(), b.s_.size()));
        for (std::size_t j = 0; j < r.size(); ++j)
            r[j] = a.slice(static_cast<int>(j)) + b.slice(static_cast<int>(j));
        return BiPoly(std::move(r));
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
        std::vector<UniPoly> r(std::max(a.s_.size(), b.s_.size()));
        for (std::size_t j = 0; j < r.size(); ++j)
            r[j] = a.slice(static_cast<int>(j)) - b.slice(static_cast<int>(j));
        return BiPoly(std::move(r));
    }
    friend BiPoly operator-(const BiPoly& a) {
        std::vector<UniPoly> r(a.s_);
        for (auto& p : r) p = -p;
        return BiPoly(std::move(r));
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        if (a.is_zero() || b.is_zero()) return BiPoly();
        std::vector<UniPoly> r(a.s_.size() + b.s_.size() - 1);
        for (std::size_t i = 0; i < a.s_.size(); ++i)
            for (std::size_t j = 0; j < b.s_.size(); ++j) r[i + j] = r[i + j] + a.s_[i] * b.s_[j];
        return BiPoly(std::move(r));
    }
    friend BiPoly operator*(const BiPoly& a, const GaussianRational& c) {
        if (c.is_zero()) return BiPoly();
        std::vector<UniPoly> r(a.s_);
        for (auto& p : r) p = p * c;
        return BiPoly(std::move(r));
    }
    friend BiPoly operator*(const GaussianRational& c, const BiPoly& a) { return a * c; }
    friend BiPoly operator*(const BiPoly& a, const UniPoly& u) {
        if (a.is_zero() || u.is_zero()) return BiPoly();
        std::vector<UniPoly> r(a.s_);
        for (auto& p : r) p = p * u;
        return BiPoly(std::move(r));
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.s_ == b.s_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly pow(unsigned long e) const {
        BiPoly r = one();
        BiPoly base = *this;
        while (e) {
            if (e & 1) r = r * base;
            if (e >>= 1) base = base * base;
        }
        return r;
    }

    BiPoly derivative_y() const {
        if (s_.size() <= 1) return BiPoly();
        std::vector<UniPoly> r(s_.size() - 1);
        for (std::size_t j = 1; j < s_.size(); ++j)
            r[j - 1] = s_[j] * GaussianRational(static_cast<long>(j));
        return BiPoly(std::move(r));
    }
    BiPoly derivative_x() const {
        std::vector<UniPoly> r(s_.size());
        for (std::size_t j = 0; j < s_.size(); ++j) r[j] = s_[j].derivative();
        return BiPoly(std::move(r));
    }

    BiPoly swap_xy() const {
        const int dx = degree_x();
        if (dx < 0) return BiPoly();
        std::vector<UniPoly> r;
        r.reserve(static_cast<std::size_t>(dx) + 1);
        for (int i = 0; i <= dx; ++i) {
            std::vector<GaussianRational> col(s_.size());
            for (std::size_t j = 0; j < s_.size(); ++j) col[j] = s_[j].coeff(i);
            r.push_back(UniPoly(std::move(col)));
        }
        return BiPoly(std::move(r));
    }

    // polynomial in y obtained by collecting the coefficients of x^i
    UniPoly x_slice(int i) const {
        std::vector<GaussianRational> col(s_.size());
        for (std::size_t j = 0; j < s_.size(); ++j) col[j] = s_[j].coeff(i);
        return UniPoly(std::move(col));
    }

    // coefficient of the leading term in x-major lexicographic order
    // (highest x power, then highest y power)
    GaussianRational lex_leading_coeff() const {
        if (is_zero()) throw DomainError(Errc::ZeroPolynomial, "zero polynomial has no leading term");
        const int dx = degree_x();
        for (int j = degree_y(); j >= 0; --j) {
            if (slice(j).degree() == dx) return slice(j).coeff(dx);
        }
        return GaussianRational();  // unreachable
    }

  private:
    void trim() {
        while (!s_.empty() && s_.back().is_zero()) s_.pop_back();
    }

    std::vector<UniPoly> s_;
};

// Monic GCD of the y-coefficient polynomials (each a UniPoly in x). A
// non-constant value certifies a vertical-line component of the zero set.
inline UniPoly bipoly_content_y(const BiPoly& f) {
    if (f.is_zero()) throw DomainError(Errc::ZeroPolynomial, "content of zero polynomial");
    UniPoly g;
    for (const auto& p : f.slices()) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? p.monic() : unipoly_gcd(g, p);
        if (g.is_constant()) break;
    }
    return g;
}

inline UniPoly bipoly_content_x(const BiPoly& f) { return bipoly_content_y(f.swap_xy()); }

// f with its y-content divided out (primitive as a polynomial in y over
// rational functions of x).
inline BiPoly primitive_part_y(const BiPoly& f) {
    if (f.is_zero()) return f;
    UniPoly c = bipoly_content_y(f);
    if (c == UniPoly::one()) return f;
    std::vector<UniPoly> r;
    r.reserve(f.slices().size());
    for (const auto& p : f.slices()) {
        UniPoly q;
        if (!UniPoly::exact_div(p, c, q))
            throw DomainError(Errc::ZeroPolynomial, "content does not divide its polynomial");
        r.push_back(std::move(q));
    }
    return BiPoly(std::move(r));
}

// Pseudo-division in y over the coefficient ring Q(i)[x]:
// lead_y(b)^(deg_y a - deg_y b + 1) * a == quot*b + rem, deg_y rem < deg_y b.
struct BiPolyPseudoDivMod {
    BiPoly quot;
    BiPoly rem;
};

inline BiPolyPseudoDivMod pseudo_divmod_y(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw DomainError(Errc::ZeroPolynomial, "pseudo-division by zero polynomial");
    const int db = b.degree_y();
    if (a.degree_y() < db) return {BiPoly(), a};
    const UniPoly& lb = b.lead_y();
    int e = a.degree_y() - db + 1;
    BiPoly r = a;
    BiPoly q;
    while (!r.is_zero() && r.degree_y() >= db) {
        const UniPoly s = r.lead_y();
        const int k = r.degree_y() - db;
        // q = lb*q + s*y^k ; r = lb*r - s*y^k*b
        std::vector<UniPoly> sy(static_cast<std::size_t>(k) + 1);
        sy.back() = s;
        BiPoly term(std::move(sy));
        q = q * lb + term;
        r = r * lb - term * b;
        --e;
    }
    if (e > 0) {
        UniPoly f = UniPoly::one();
        for (int t = 0; t < e; ++t) f = f * lb;
        q = q * f;
        r = r * f;
    }
    return {std::move(q), std::move(r)};
}

// Exact quotient in Q(i)[x,y] when b divides a; false otherwise.
inline bool bipoly_exact_div(const BiPoly& a, const BiPoly& b, BiPoly& out) {
    if (a.is_zero()) {
        out = BiPoly();
        return true;
    }
    if (b.is_zero()) return false;
    if (b.degree_y() == 0) {
        // divisor is a UniPoly in x: divide every slice
        const UniPoly& d = b.slice(0);
        std::vector<UniPoly> r;
        r.reserve(a.slices().size());
        for (const auto& p : a.slices()) {
            UniPoly q;
            if (!UniPoly::exact_div(p, d, q)) return false;
            r.push_back(std::move(q));
        }
        out = BiPoly(std::move(r));
        return true;
    }
    const int delta = a.degree_y() - b.degree_y();
    if (delta < 0) return false;
    BiPolyPseudoDivMod pd = pseudo_divmod_y(a, b);
    if (!pd.rem.is_zero()) return false;
    // quot = pd.quot / lb^(delta+1), slicewise exact
    UniPoly f = UniPoly::one();
    for (int t = 0; t <= delta; ++t) f = f * b.lead_y();
    std::vector<UniPoly> r;
    r.reserve(pd.quot.slices().size());
    for (const auto& p : pd.quot.slices()) {
        UniPoly q;
        if (!UniPoly::exact_div(p, f, q)) return false;
        r.push_back(std::move(q));
    }
    out = BiPoly(std::move(r));
    return true;
}

// Scale so the leading y-slice is monic in x (unit normalization of a
// primitive polynomial).
inline BiPoly normalize_unit_y(const BiPoly& f) {
    if (f.is_zero()) return f;
    GaussianRational lead = f.lead_y().leading();
    if (lead.is_one()) return f;
    return f * (GaussianRational(1) / lead);
}

// GCD of f and g viewed as polynomials in y with coefficients in rational
// functions of x, computed by the subresultant pseudo-remainder sequence
// with content stripping. The result is primitive in y with monic leading
// slice; two polynomials with no common y-factor give the constant 1.
inline BiPoly bipoly_gcd_y(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw DomainError(Errc::ZeroPolynomial, "gcd with zero polynomial");
    BiPoly a = primitive_part_y(f);
    BiPoly b = primitive_part_y(g);
    if (a.degree_y() < b.degree_y()) std::swap(a, b);
    if (b.degree_y() == 0) return BiPoly::one();

    UniPoly h = UniPoly::one();
    UniPoly gc = UniPoly::one();
    while (true) {
        const int delta = a.degree_y() - b.degree_y();
        BiPoly r = pseudo_divmod_y(a, b).rem;
        if (r.is_zero()) break;
        if (r.degree_y() == 0) return BiPoly::one();
        // divide by gc*h^delta (exact up to sign; signs cancel in the gcd)
        UniPoly divisor = gc;
        for (int t = 0; t < delta; ++t) divisor = divisor * h;
        a = std::move(b);
        BiPoly nb;
        if (!bipoly_exact_div(r, BiPoly(std::vector<UniPoly>{divisor}), nb))
            throw DomainError(Errc::ZeroPolynomial, "subresultant divisor failed to divide");
        b = std::move(nb);
        gc = a.lead_y();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = gc;
        } else {
            UniPoly num = gc;
            for (int t = 1; t < delta; ++t) num = num * gc;
            UniPoly den = UniPoly::one();
            for (int t = 1; t < delta; ++t) den = den * h;
            UniPoly q;
            if (!UniPoly::exact_div(num, den, q))
                throw DomainError(Errc::ZeroPolynomial, "subresultant scale failed to divide");
            h = std::move(q);
        }
    }
    return normalize_unit_y(primitive_part_y(b));
}

// Attempts to write f == c * g^m with g primitive in both variables and the
// coefficient of g's x-major lexicographic leading term equal to 1. Method:
// the y-derivative GCD h = gcd_y(f, df/dy) captures g^(m-1) when g is
// squarefree in y; the candidate f/h is confirmed or rejected by exact
// re-expansion, falling back to the same computation with the variables
// swapped. m < 2 is rejected outright; degrees not divisible by m simply
// yield no decomposition.
inline std::optional<std::pair<GaussianRational, BiPoly>> perfect_power_extract(const BiPoly& f,
                                                                               int m) {
    if (m < 2) throw DomainError(Errc::BadExponent, "exponent must be at least 2");
    if (f.is_zero()) return std::nullopt;
    const int dx = f.degree_x(), dy = f.degree_y();
    if (dx % m != 0 || dy % m != 0) return std::nullopt;
    if (dx == 0 && dy == 0) return std::make_pair(f.coeff(0, 0), BiPoly::one());

    auto attempt = [&](const BiPoly& p) -> std::optional<BiPoly> {
        BiPoly dp = p.derivative_y();
        if (dp.is_zero()) return std::nullopt;
        BiPoly h = bipoly_gcd_y(p, dp);
        BiPoly cand;
        if (!bipoly_exact_div(p, h, cand)) return std::nullopt;
        if (cand.is_zero()) return std::nullopt;
        cand = primitive_part_y(cand);
        BiPoly sw = primitive_part_y(cand.swap_xy()).swap_xy();
        return sw;
    };

    for (int route = 0; route < 2; ++route) {
        const BiPoly p = (route == 0) ? f : f.swap_xy();
        auto cand = attempt(p);
        if (!cand) continue;
        BiPoly g = (route == 0) ? *cand : cand->swap_xy();
        if (g.degree_x() * m != dx || g.degree_y() * m != dy) continue;
        g = g * (GaussianRational(1) / g.lex_leading_coeff());
        const GaussianRational c = f.lex_leading_coeff();
        if (c * g.pow(static_cast<unsigned long>(m)) == f) return std::make_pair(c, g);
    }
    return std::nullopt;
}

}  // namespace dtuples
