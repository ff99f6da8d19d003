#pragma once

#include <memory>
#include <utility>
#include <variant>

#include "dtuples/bipoly.hpp"
#include "dtuples/correspondence.hpp"
#include "dtuples/exact_matrix.hpp"
#include "dtuples/factorize.hpp"

namespace dtuples {

class Classification;

// Coefficient matrix has rank exactly 2: the correspondence separates as
// phi(x) = psi(y) and is a map of d-tuples.
struct Rank2Result {
    Factorization factorization;
    GaussianRational scale;  // compose(factorization) == scale * f
};

// f == scale * base^exponent with the base itself a map of (d/exponent)-
// tuples; then every fiber of f is a fiber of the base with multiplicity.
struct PerfectPowerResult {
    int exponent;
    GaussianRational scale;
    Correspondence base;
    std::shared_ptr<const Classification> base_classification;
};

struct NotMapOfTuplesResult {
    std::size_t rank;
};

class Classification {
  public:
    using Value = std::variant<Rank2Result, PerfectPowerResult, NotMapOfTuplesResult>;

    explicit Classification(Value v) : value_(std::move(v)) {}

    const Value& value() const { return value_; }
    bool is_rank2() const { return std::holds_alternative<Rank2Result>(value_); }
    bool is_perfect_power() const { return std::holds_alternative<PerfectPowerResult>(value_); }
    bool is_map_of_tuples() const { return !std::holds_alternative<NotMapOfTuplesResult>(value_); }

    const Rank2Result& rank2() const { return std::get<Rank2Result>(value_); }
    const PerfectPowerResult& perfect_power() const { return std::get<PerfectPowerResult>(value_); }
    const NotMapOfTuplesResult& negative() const { return std::get<NotMapOfTuplesResult>(value_); }

  private:
    Value value_;
};

// Decision procedure: rank 2 separates directly. Otherwise try exact
// perfect-power decompositions f = c*g^m for every divisor m >= 2 of d,
// largest first so the maximal power is reported, and recurse on the base
// (degree 1 bottoms out at rank 2: a valid 2x2 matrix of rank < 2 would be a
// product of one-variable factors and fail line-component validation).
// A validated matrix always has rank >= 2, so anything else is a negative
// with its exact rank.
inline Classification classify(const Correspondence& f) {
    const std::size_t rank = rank_exact(f.display_matrix());
    if (rank == 2) {
        FactorizeResult fr = factorize(f);
        return Classification(Rank2Result{std::move(fr.factorization), std::move(fr.scale)});
    }
    const int d = f.d();
    const BiPoly poly = f.to_bipoly();
    for (int m = d; m >= 2; --m) {
        if (d % m != 0) continue;
        auto pp = perfect_power_extract(poly, m);
        if (!pp) continue;
        Correspondence base = Correspondence::from_bipoly(pp->second);
        Classification base_class = classify(base);
        if (!base_class.is_map_of_tuples()) continue;
        return Classification(PerfectPowerResult{
            m, std::move(pp->first), std::move(base),
            std::make_shared<const Classification>(std::move(base_class))});
    }
    return Classification(NotMapOfTuplesResult{rank});
}

}  // namespace dtuples
