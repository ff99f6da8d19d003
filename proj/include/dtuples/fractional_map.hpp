#pragma once

#include <complex>
#include <utility>

#include "dtuples/errors.hpp"
#include "dtuples/gaussian.hpp"
#include "dtuples/unipoly.hpp"

namespace dtuples {

// Degree-d fractional map z = num(t)/den(t) in one variable. Invariants:
// gcd(num, den) = 1, den != 0, and max(deg num, deg den) == degree(). The
// relative scale of num and den is preserved exactly as given (only a
// non-trivial common polynomial factor is divided out), so compositions obey
// exact scalar identities.
class FractionalMap {
  public:
    static FractionalMap make(UniPoly num, UniPoly den) {
        if (den.is_zero()) throw DomainError(Errc::ZeroDenominator, "fractional map with zero denominator");
        if (!num.is_zero()) {
            UniPoly g = unipoly_gcd(num, den);
            if (g.degree() > 0) {
                UniPoly qn, qd;
                UniPoly::exact_div(num, g, qn);
                UniPoly::exact_div(den, g, qd);
                num = std::move(qn);
                den = std::move(qd);
            }
        }
        return FractionalMap(std::move(num), std::move(den));
    }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    int degree() const { return std::max(num_.degree(), den_.degree()); }

    bool is_reduced() const {
        return num_.is_zero() || unipoly_gcd(num_, den_).degree() == 0;
    }

    // value as a pair (num(t), den(t)); the caller handles den ~ 0 as the
    // point at infinity
    std::pair<std::complex<double>, std::complex<double>> eval_pair(const std::complex<double>& t) const {
        return {num_.eval(t), den_.eval(t)};
    }

    GaussianRational eval_exact(const GaussianRational& t) const {
        return num_.eval(t) / den_.eval(t);
    }

    friend bool operator==(const FractionalMap& a, const FractionalMap& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

  private:
    FractionalMap(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {}
    UniPoly num_;
    UniPoly den_;
};

// Invertible coefficient matrix (a b; c d) acting by t -> (a t + b)/(c t + d).
struct MobiusMap {
    GaussianRational a, b, c, d;

    GaussianRational det() const { return a * d - b * c; }

    MobiusMap inverse() const {
        if (det().is_zero()) throw DomainError(Errc::SingularMobius, "Mobius map is singular");
        return {d, -b, -c, a};
    }
};

// M applied after the map: num' = a*num + b*den, den' = c*num + d*den. An
// invertible M preserves reducedness and top degree; the linear combination
// is kept exactly (no rescaling), so the coefficient matrix of a composed
// pair picks up exactly det(M).
inline FractionalMap mobius_postcompose(const MobiusMap& m, const FractionalMap& f) {
    if (m.det().is_zero()) throw DomainError(Errc::SingularMobius, "Mobius map is singular");
    return FractionalMap::make(f.num() * m.a + f.den() * m.b, f.num() * m.c + f.den() * m.d);
}

}  // namespace dtuples
