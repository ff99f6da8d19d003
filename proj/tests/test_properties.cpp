#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "helpers.hpp"

using namespace dtuples;

namespace {

// f = scale * base^m for a random composed base, the canonical way to make
// a non-trivial map of (k*m)-tuples whose matrix rank exceeds 2.
struct PowerCase {
    Correspondence f;
    Correspondence base;
    int exponent;
    GaussianRational scale;
};

PowerCase rand_power_case(std::mt19937_64& rng, int base_degree, int exponent) {
    for (;;) {
        auto [phi, psi] = testhelp::rand_map_pair(rng, base_degree, 3);
        const Correspondence base = compose(phi, psi);
        const GaussianRational c = testhelp::rand_gr_nonzero(rng, 3);
        const BiPoly f = base.to_bipoly().pow(static_cast<unsigned long>(exponent)) * c;
        try {
            return {Correspondence::from_bipoly(f), base, exponent, c};
        } catch (const DomainError&) {
            // powers of a degenerate base can lose validation; resample
        }
    }
}

// Symmetric rank-2 matrix A[i][j] = k[i]*l[j] + l[i]*k[j] built from two
// random coefficient vectors; resamples until it validates with rank 2.
Correspondence rand_symmetric_rank2(std::mt19937_64& rng, int d) {
    const std::size_t side = static_cast<std::size_t>(d) + 1;
    for (;;) {
        std::vector<GaussianRational> k(side), l(side);
        for (auto& v : k) v = testhelp::rand_gr(rng, 4);
        for (auto& v : l) v = testhelp::rand_gr(rng, 4);
        std::vector<std::vector<GaussianRational>> grid(side, std::vector<GaussianRational>(side));
        for (std::size_t i = 0; i < side; ++i)
            for (std::size_t j = 0; j < side; ++j) grid[i][j] = k[i] * l[j] + l[i] * k[j];
        try {
            Correspondence f = Correspondence::from_grid(grid);
            if (rank_exact(f.display_matrix()) == 2) return f;
        } catch (const DomainError&) {
        }
    }
}

}  // namespace

TEST_CASE("postcomposing both maps scales the matrix by the determinant") {
    std::mt19937_64 rng(101);
    int done = 0;
    while (done < 150) {
        const int d = 1 + static_cast<int>(rng() % 3);
        auto [phi, psi] = testhelp::rand_map_pair(rng, d, 4);
        const MobiusMap m = testhelp::rand_mobius(rng, 4);
        const Correspondence f = compose(phi, psi);
        const Correspondence g = compose(mobius_postcompose(m, phi), mobius_postcompose(m, psi));
        const auto scalar = scalar_multiple_of(g, f);
        REQUIRE(scalar.has_value());
        CHECK(*scalar == m.det());
        ++done;
    }
}

TEST_CASE("factorization round trip reproduces the matrix up to its scale") {
    std::mt19937_64 rng(102);
    int done = 0, numeric_checked = 0;
    while (done < 80) {
        const int d = 1 + static_cast<int>(rng() % 3);
        auto [phi, psi] = testhelp::rand_map_pair(rng, d, 4);
        const Correspondence f = compose(phi, psi);
        if (rank_exact(f.display_matrix()) != 2) continue;  // degenerate pair collapsed the rank
        const FactorizeResult fr = factorize(f);
        const Correspondence back = compose(fr.factorization.phi, fr.factorization.psi);
        const auto scalar = scalar_multiple_of(back, f);
        REQUIRE(scalar.has_value());
        CHECK(*scalar == fr.scale);
        CHECK_FALSE(fr.scale.is_zero());
        // spot-check a sample of the round trips numerically as well
        if (numeric_checked < 8) {
            CHECK(verify_factorization(f, fr.factorization, 15, 1e-6,
                                       static_cast<std::uint64_t>(done)));
            ++numeric_checked;
        }
        ++done;
    }
}

TEST_CASE("composed correspondences never exceed rank 2") {
    std::mt19937_64 rng(103);
    for (int it = 0; it < 200; ++it) {
        const int d = 1 + static_cast<int>(rng() % 4);
        auto [phi, psi] = testhelp::rand_map_pair(rng, d, 5);
        CHECK(rank_exact(compose(phi, psi).display_matrix()) <= 2);
    }
}

TEST_CASE("scaled powers of a composed base classify as perfect powers") {
    std::mt19937_64 rng(104);
    for (int it = 0; it < 25; ++it) {
        const int k = 1 + static_cast<int>(rng() % 2);
        const int m = 2 + static_cast<int>(rng() % 2);
        const PowerCase pc = rand_power_case(rng, k, m);
        const Classification cls = classify(pc.f);
        REQUIRE(cls.is_perfect_power());
        CHECK(cls.is_map_of_tuples());
        const PerfectPowerResult& r = cls.perfect_power();
        CHECK(r.exponent == pc.exponent);
        CHECK(r.base.d() == pc.base.d());
        // the reported base re-expands exactly to the input
        const BiPoly again = r.base.to_bipoly().pow(static_cast<unsigned long>(r.exponent)) * r.scale;
        CHECK(Correspondence::from_bipoly(again) == pc.f);
        // and the base is recognized as a map of tuples itself
        REQUIRE(r.base_classification != nullptr);
        CHECK(r.base_classification->is_map_of_tuples());
    }
}

TEST_CASE("exact decision agrees with the numeric oracle") {
    std::mt19937_64 rng(105);
    int case_id = 0;

    auto agree = [&](const Correspondence& f) {
        const bool exact = classify(f).is_map_of_tuples();
        const OracleVerdict v =
            verify_map_of_tuples(f, 25, 1e-6, static_cast<std::uint64_t>(1000 + case_id));
        INFO("case " << case_id << ", exact verdict " << (exact ? "yes" : "no"));
        CHECK(exact == v.pass);
        ++case_id;
    };

    SECTION("separable correspondences") {
        for (int it = 0; it < 10; ++it) {
            const int d = 1 + static_cast<int>(rng() % 3);
            auto [phi, psi] = testhelp::rand_map_pair(rng, d, 4);
            agree(compose(phi, psi));
        }
    }

    SECTION("perfect powers") {
        for (int it = 0; it < 6; ++it) {
            agree(rand_power_case(rng, 1, 2 + static_cast<int>(rng() % 2)).f);
        }
    }

    SECTION("dense random matrices are generically negative") {
        int negatives = 0;
        for (int it = 0; it < 10; ++it) {
            const int d = 2 + static_cast<int>(rng() % 2);
            const Correspondence f = testhelp::rand_valid_grid(rng, d, 4);
            if (!classify(f).is_map_of_tuples()) ++negatives;
            agree(f);
        }
        CHECK(negatives >= 8);  // the generator is overwhelmingly rank > 2
    }
}

TEST_CASE("symmetric rank-2 matrices satisfy the factor symmetry condition") {
    std::mt19937_64 rng(106);
    for (int it = 0; it < 40; ++it) {
        const int d = 1 + static_cast<int>(rng() % 3);
        const Correspondence f = rand_symmetric_rank2(rng, d);
        const SymmetryReport rep = symmetry_report(f);
        CHECK(rep.symmetric);
        const FactorizeResult fr = factorize(f);
        CHECK(check_symm_factor_condition(fr.factorization));
    }
}

TEST_CASE("matrix serialization is stable under repeated round trips") {
    std::mt19937_64 rng(107);
    for (int it = 0; it < 40; ++it) {
        const int d = 1 + static_cast<int>(rng() % 3);
        const Correspondence f = testhelp::rand_valid_grid(rng, d, 5);
        const std::string once = save_matrix(f).dump(2);
        const std::string twice = save_matrix(load_matrix(nlohmann::json::parse(once))).dump(2);
        CHECK(once == twice);
    }
}
