#pragma once

#include <random>
#include <utility>
#include <vector>

#include "dtuples/dtuples.hpp"

// Shared random generators for the test suites. All tests seed their own
// engine so every run is reproducible.
namespace testhelp {

using namespace dtuples;

inline Rational rand_rational(std::mt19937_64& rng, int span = 6) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, 4);
    return Rational(num(rng), den(rng));
}

inline GaussianRational rand_gr(std::mt19937_64& rng, int span = 6) {
    return GaussianRational(rand_rational(rng, span), rand_rational(rng, span));
}

inline GaussianRational rand_gr_nonzero(std::mt19937_64& rng, int span = 6) {
    for (;;) {
        GaussianRational g = rand_gr(rng, span);
        if (!g.is_zero()) return g;
    }
}

// Random polynomial of exactly the given degree.
inline UniPoly rand_poly(std::mt19937_64& rng, int degree, int span = 6) {
    std::vector<GaussianRational> c(static_cast<std::size_t>(degree) + 1);
    for (int k = 0; k < degree; ++k) c[static_cast<std::size_t>(k)] = rand_gr(rng, span);
    c[static_cast<std::size_t>(degree)] = rand_gr_nonzero(rng, span);
    return UniPoly(std::move(c));
}

// Random fractional map of exactly the given degree (numerator keeps the
// top coefficient; reduction inside make() may still lower it, callers
// retry through rand_map_pair).
inline FractionalMap rand_map(std::mt19937_64& rng, int degree, int span = 6) {
    for (;;) {
        UniPoly num = rand_poly(rng, degree, span);
        std::uniform_int_distribution<int> dd(0, degree);
        UniPoly den = rand_poly(rng, dd(rng), span);
        try {
            FractionalMap m = FractionalMap::make(std::move(num), std::move(den));
            if (m.degree() == degree) return m;
        } catch (const DomainError&) {
        }
    }
}

// Pair of degree-d maps whose composition is a valid correspondence.
inline std::pair<FractionalMap, FractionalMap> rand_map_pair(std::mt19937_64& rng, int d,
                                                             int span = 6) {
    for (;;) {
        FractionalMap phi = rand_map(rng, d, span);
        FractionalMap psi = rand_map(rng, d, span);
        try {
            (void)compose(phi, psi);
            return {std::move(phi), std::move(psi)};
        } catch (const DomainError&) {
        }
    }
}

// Random valid correspondence of the given degree from a dense grid
// (generically of full rank d+1, so a negative classification for d >= 2).
inline Correspondence rand_valid_grid(std::mt19937_64& rng, int d, int span = 6) {
    const std::size_t side = static_cast<std::size_t>(d) + 1;
    for (;;) {
        std::vector<std::vector<GaussianRational>> grid(side, std::vector<GaussianRational>(side));
        for (auto& row : grid)
            for (auto& v : row) v = rand_gr(rng, span);
        try {
            return Correspondence::from_grid(grid);
        } catch (const DomainError&) {
        }
    }
}

// Random Moebius map with nonzero determinant.
inline MobiusMap rand_mobius(std::mt19937_64& rng, int span = 6) {
    for (;;) {
        MobiusMap m{rand_gr(rng, span), rand_gr(rng, span), rand_gr(rng, span), rand_gr(rng, span)};
        if (!m.det().is_zero()) return m;
    }
}

}  // namespace testhelp
