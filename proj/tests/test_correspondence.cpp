#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace dtuples;

namespace {

Correspondence corr(const char* expr) {
    return Correspondence::from_bipoly(parse_polynomial(expr));
}

Errc thrown_code(const char* expr) {
    try {
        corr(expr);
    } catch (const DomainError& e) {
        return e.code();
    }
    FAIL("expected a validation throw for: " << expr);
    return Errc::ZeroMatrix;
}

}  // namespace

TEST_CASE("validation rejects degenerate inputs") {
    CHECK(thrown_code("x*y - x*y") == Errc::ZeroMatrix);
    // constant polynomial: degree 0
    CHECK(thrown_code("7") == Errc::DegenerateDegree);
    // top x-row zero: not generically d-valued in x (deg_x < deg_y)
    CHECK(thrown_code("x*y^2 + 1") == Errc::DegenerateDegree);
    CHECK(thrown_code("x^2*y + 1") == Errc::DegenerateDegree);
    // pure-x factor (vertical lines) and pure-y factor (horizontal lines)
    CHECK(thrown_code("x^2*y^2 + x^2*y") == Errc::LineComponent);  // x^2 * y * (y + 1)
    CHECK(thrown_code("x*y + y") == Errc::LineComponent);          // y * (x + 1)
    CHECK(thrown_code("(x + 1)*(y + 1)") == Errc::LineComponent);  // rank 1 product
    // valid inputs sail through
    CHECK(corr("x*y - 1").d() == 1);
    CHECK(corr("x^2*y^2 + x*y + 1").d() == 2);
}

TEST_CASE("coefficient storage and display layout agree") {
    const Correspondence f = corr("5*x^2*y^2 + 3*x*y^2 + 2*y + 7");
    CHECK(f.coeff(2, 2) == GaussianRational(5));
    CHECK(f.coeff(1, 2) == GaussianRational(3));
    CHECK(f.coeff(0, 1) == GaussianRational(2));
    CHECK(f.coeff(0, 0) == GaussianRational(7));
    const ExactMatrix m = f.display_matrix();
    // display row r is x^(d-r), column c is y^(d-c)
    CHECK(m.at(0, 0) == GaussianRational(5));
    CHECK(m.at(1, 0) == GaussianRational(3));
    CHECK(m.at(2, 1) == GaussianRational(2));
    CHECK(m.at(2, 2) == GaussianRational(7));
    CHECK(Correspondence::from_bipoly(f.to_bipoly()) == f);
}

TEST_CASE("swap and conjugate transforms") {
    const Correspondence f = corr("x^2*y^2 + 2*x*y^2 + i*y^2 + 1");
    const Correspondence g = f.swap_variables();
    CHECK(g.coeff(2, 1) == GaussianRational(2));
    CHECK(g.swap_variables() == f);
    const Correspondence c = f.conjugate_coeffs();
    CHECK(c.coeff(0, 2) == GaussianRational(0, -1));
    CHECK(c.conjugate_coeffs() == f);
}

TEST_CASE("compose implements the rank-2 coefficient formula") {
    // phi = x/1, psi = 1/y gives x*y - 1
    const auto phi = parse_fractional_map("x", 'x');
    const auto psi = parse_fractional_map("1/y", 'y');
    const Correspondence f = compose(phi, psi);
    CHECK(f == corr("x*y - 1"));

    // degree mismatch is rejected
    const auto phi2 = parse_fractional_map("x^2", 'x');
    CHECK_THROWS_AS(compose(phi2, psi), DomainError);
}

TEST_CASE("scalar multiple detection") {
    const Correspondence f = corr("x*y - 1");
    const Correspondence g = corr("3*x*y - 3");
    const auto s = scalar_multiple_of(g, f);
    REQUIRE(s.has_value());
    CHECK(*s == GaussianRational(3));
    CHECK_FALSE(scalar_multiple_of(corr("x*y + 1"), f).has_value());
    CHECK_FALSE(scalar_multiple_of(corr("x*y - 1 + x"), f).has_value());
}

TEST_CASE("factorize round-trips on random rank-2 composites") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 150; ++t) {
        std::uniform_int_distribution<int> dd(1, 4);
        const auto [phi, psi] = testhelp::rand_map_pair(rng, dd(rng), 3);
        const Correspondence f = compose(phi, psi);
        const FactorizeResult fr = factorize(f);
        REQUIRE_FALSE(fr.scale.is_zero());
        const Correspondence back = compose(fr.factorization.phi, fr.factorization.psi);
        const auto s = scalar_multiple_of(back, f);
        REQUIRE(s.has_value());
        CHECK(*s == fr.scale);
    }
}

TEST_CASE("factorize refuses ranks other than 2") {
    try {
        factorize(corr("x^2*y^2 + x*y + 1"));  // exact rank 3
        FAIL("expected RankNotTwo");
    } catch (const DomainError& e) {
        CHECK(e.code() == Errc::RankNotTwo);
    }
}

TEST_CASE("moebius determinant law") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 100; ++t) {
        std::uniform_int_distribution<int> dd(1, 3);
        const auto [phi, psi] = testhelp::rand_map_pair(rng, dd(rng), 3);
        const MobiusMap m = testhelp::rand_mobius(rng, 3);
        try {
            const Correspondence lhs = compose(mobius_postcompose(m, phi), mobius_postcompose(m, psi));
            const auto s = scalar_multiple_of(lhs, compose(phi, psi));
            REQUIRE(s.has_value());
            CHECK(*s == m.det());
        } catch (const DomainError&) {
            // post-composition may reduce degree or hit validation; that case
            // is exercised elsewhere, the law applies when both sides exist
        }
    }
}

TEST_CASE("moebius inverse and singular rejection") {
    const MobiusMap m{GaussianRational(1), GaussianRational(2), GaussianRational(3),
                      GaussianRational(7)};
    const MobiusMap inv = m.inverse();
    CHECK(m.det() == GaussianRational(1));
    CHECK(inv.a == GaussianRational(7));
    const MobiusMap sing{GaussianRational(1), GaussianRational(2), GaussianRational(2),
                         GaussianRational(4)};
    CHECK_THROWS_AS(sing.inverse(), DomainError);
    const auto phi = parse_fractional_map("x^2", 'x');
    CHECK_THROWS_AS(mobius_postcompose(sing, phi), DomainError);
}

TEST_CASE("classification of the three shapes") {
    SECTION("rank 2 at degree 1 is the recursion floor") {
        const Classification c = classify(corr("x*y - 1"));
        REQUIRE(c.is_rank2());
        CHECK(c.is_map_of_tuples());
    }
    SECTION("negative case records the exact rank") {
        const Classification c = classify(corr("x^2*y^2 + x*y + 1"));
        REQUIRE_FALSE(c.is_map_of_tuples());
        CHECK(c.negative().rank == 3);
    }
    SECTION("perfect power reports the largest exponent") {
        const Classification c = classify(corr("(x*y + 1)^6"));
        REQUIRE(c.is_perfect_power());
        CHECK(c.perfect_power().exponent == 6);
        CHECK(c.perfect_power().base == corr("x*y + 1"));
        CHECK(c.perfect_power().base_classification->is_rank2());
    }
    SECTION("power of a non-map stays negative") {
        // (x^2 y^2 + x y + 1)^2 has a rank-3 base, so no branch applies
        const Classification c = classify(corr("(x^2*y^2 + x*y + 1)^2"));
        CHECK_FALSE(c.is_map_of_tuples());
    }
    SECTION("random high-rank grids classify negative") {
        std::mt19937_64 rng(43);
        int negatives = 0;
        for (int t = 0; t < 60; ++t) {
            const Correspondence f = testhelp::rand_valid_grid(rng, 2, 4);
            const Classification c = classify(f);
            const int r = rank_exact(f.display_matrix());
            if (r > 2) {
                // a valid grid of rank > 2 can only be a map through the
                // power branch, which random grids essentially never hit
                CHECK_FALSE(c.is_rank2());
                if (!c.is_map_of_tuples()) {
                    CHECK(c.negative().rank == r);
                    ++negatives;
                }
            }
        }
        CHECK(negatives > 30);  // the generator really does produce negatives
    }
}

TEST_CASE("symmetry report flags") {
    SECTION("antisymmetric matrix: swap scalar -1, not symmetric") {
        const SymmetryReport rep = symmetry_report(corr("x^2 - y^2"));
        CHECK_FALSE(rep.symmetric);
        REQUIRE(rep.swap_scalar.has_value());
        CHECK(*rep.swap_scalar == GaussianRational(-1));
        CHECK(rep.real_up_to_constant);
        REQUIRE(rep.hermitian_unimodular.has_value());
        CHECK(*rep.hermitian_unimodular == GaussianRational(-1));
    }
    SECTION("symmetric real matrix") {
        const SymmetryReport rep = symmetry_report(corr("x*y + x + y + 2"));
        CHECK(rep.symmetric);
        REQUIRE(rep.swap_scalar.has_value());
        CHECK(*rep.swap_scalar == GaussianRational(1));
        CHECK(rep.real_up_to_constant);
        REQUIRE(rep.real_witness.has_value());
        CHECK(*rep.real_witness == GaussianRational(1));
        REQUIRE(rep.hermitian_unimodular.has_value());
        CHECK(*rep.hermitian_unimodular == GaussianRational(1));
    }
    SECTION("real up to a complex constant") {
        const SymmetryReport rep = symmetry_report(corr("i*x*y + 2*i"));
        CHECK(rep.real_up_to_constant);
        REQUIRE(rep.real_witness.has_value());
        CHECK(*rep.real_witness == GaussianRational(0, 1));
        CHECK_FALSE(symmetry_report(corr("i*x*y + 2")).real_up_to_constant);
    }
    SECTION("swap coherence: symmetric iff swap_variables is identical") {
        std::mt19937_64 rng(44);
        for (int t = 0; t < 80; ++t) {
            const Correspondence f = testhelp::rand_valid_grid(rng, 2, 3);
            const SymmetryReport rep = symmetry_report(f);
            CHECK(rep.symmetric == (f.swap_variables() == f));
        }
    }
}

TEST_CASE("factor-level symmetry condition tracks matrix symmetry") {
    // known symmetric example: x*y + x + y + 2 factors with this property
    const FactorizeResult sym = factorize(corr("x*y + x + y + 2"));
    CHECK(check_symm_factor_condition(sym.factorization));

    // x^2 - y^2 = (x^2)/1 = (y^2)/1: the composed matrix is antisymmetric,
    // so the factor-level condition must come out false
    const Factorization f{parse_fractional_map("x^2", 'x'), parse_fractional_map("y^2", 'y')};
    CHECK(compose(f.phi, f.psi) == corr("x^2 - y^2"));
    CHECK_FALSE(check_symm_factor_condition(f));
    CHECK(symmetry_report(corr("x^2 - y^2")).swap_scalar.value() == GaussianRational(-1));

    std::mt19937_64 rng(45);
    for (int t = 0; t < 120; ++t) {
        std::uniform_int_distribution<int> dd(1, 3);
        const auto [phi, psi] = testhelp::rand_map_pair(rng, dd(rng), 3);
        const Factorization fact{phi, psi};
        CHECK(check_symm_factor_condition(fact) == symmetry_report(compose(phi, psi)).symmetric);
    }
}

TEST_CASE("factor-level conjugate-transpose condition implies a skew-Hermitian matrix") {
    std::mt19937_64 rng(46);
    int built = 0;
    while (built < 60) {
        std::uniform_int_distribution<int> dd(1, 3);
        const int d = dd(rng);
        // construct psi from phi by conjugating coefficients, which is
        // exactly the condition under test
        const FractionalMap phi = testhelp::rand_map(rng, d, 3);
        std::vector<GaussianRational> mu(static_cast<std::size_t>(d) + 1),
            nu(static_cast<std::size_t>(d) + 1);
        for (int k = 0; k <= d; ++k) {
            mu[static_cast<std::size_t>(k)] = conj(phi.num().coeff(k));
            nu[static_cast<std::size_t>(k)] = conj(phi.den().coeff(k));
        }
        FractionalMap psi = FractionalMap::make(UniPoly(std::move(mu)), UniPoly(std::move(nu)));
        const Factorization fact{phi, psi};
        if (!check_timerev_factor_condition(fact)) continue;  // reduction may alter coefficients
        try {
            const Correspondence f = compose(phi, psi);
            REQUIRE(symmetry_report(f).hermitian_unimodular.has_value());
            CHECK(*symmetry_report(f).hermitian_unimodular == GaussianRational(-1));
            ++built;
        } catch (const DomainError&) {
        }
    }
}
