#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "helpers.hpp"

using namespace dtuples;

TEST_CASE("every embedded example passes its own checks") {
    for (const Fixture& fx : all_fixtures()) {
        DYNAMIC_SECTION(fx.name) {
            const FixtureResult r = run_fixture_checks(fx, 40, 1e-6, 0);
            for (const auto& msg : r.failures) UNSCOPED_INFO(fx.name << " failure: " << msg);
            CHECK(r.pass);
            if (fx.name == "example3") {
                REQUIRE(r.notes.size() == 1);
                CHECK(r.notes[0].find("y = -1") != std::string::npos);
            } else {
                CHECK(r.notes.empty());
            }
        }
    }
}

TEST_CASE("embedded example outcomes, spot-checked from the outside") {
    SECTION("degree-5 example separates and its printed maps compose back") {
        const Fixture* fx = fixture_by_name("example1");
        REQUIRE(fx != nullptr);
        const Correspondence f = fixture_correspondence(*fx);
        CHECK(f.d() == 5);
        const Classification cls = classify(f);
        REQUIRE(cls.is_rank2());
        const auto [phi, psi] =
            std::pair{parse_fractional_map(*fx->phi_expr, 'x'), parse_fractional_map(*fx->psi_expr, 'y')};
        CHECK(compose(phi, psi) == f);
        // the printed matrix is an independent transcription of the expansion
        CHECK(detail::from_display_grid(*fx->display_grid) == f);
    }

    SECTION("cube example reduces to its printed degree-1 base") {
        const Correspondence f = fixture_correspondence(*fixture_by_name("example2a"));
        const Classification cls = classify(f);
        REQUIRE(cls.is_perfect_power());
        CHECK(cls.perfect_power().exponent == 3);
        CHECK(cls.perfect_power().scale == GaussianRational(1));
        CHECK(cls.perfect_power().base ==
              Correspondence::from_bipoly(parse_polynomial("x*y + x + y + 2")));
        REQUIRE(cls.perfect_power().base_classification->is_rank2());
    }

    SECTION("square example keeps a rank-2 base of degree 2") {
        const Correspondence f = fixture_correspondence(*fixture_by_name("example2b"));
        const Classification cls = classify(f);
        REQUIRE(cls.is_perfect_power());
        CHECK(cls.perfect_power().exponent == 2);
        CHECK(cls.perfect_power().base.d() == 2);
        CHECK(cls.perfect_power().base_classification->is_rank2());
    }

    SECTION("symmetric example") {
        const Correspondence f = fixture_correspondence(*fixture_by_name("example3"));
        const SymmetryReport rep = symmetry_report(f);
        CHECK(rep.symmetric);
        REQUIRE(rep.swap_scalar.has_value());
        CHECK(*rep.swap_scalar == GaussianRational(1));
        CHECK(rep.real_up_to_constant);
        REQUIRE(rep.hermitian_unimodular.has_value());
        CHECK(*rep.hermitian_unimodular == GaussianRational(1));
        // symmetric + rank 2 implies the separated maps satisfy the factor
        // symmetry condition
        CHECK(check_symm_factor_condition(factorize(f).factorization));
    }

    SECTION("real example of degree 4") {
        const Correspondence f = fixture_correspondence(*fixture_by_name("example4"));
        CHECK(f.d() == 4);
        const SymmetryReport rep = symmetry_report(f);
        CHECK_FALSE(rep.symmetric);
        CHECK(rep.real_up_to_constant);
        REQUIRE(rep.real_witness.has_value());
        CHECK(*rep.real_witness == GaussianRational(3));
    }

    SECTION("skew-conjugate example of degree 3") {
        const Fixture* fx = fixture_by_name("example5");
        REQUIRE(fx != nullptr);
        const Correspondence f = fixture_correspondence(*fx);
        CHECK(f.d() == 3);
        const SymmetryReport rep = symmetry_report(f);
        CHECK_FALSE(rep.symmetric);
        CHECK_FALSE(rep.real_up_to_constant);
        REQUIRE(rep.hermitian_unimodular.has_value());
        CHECK(*rep.hermitian_unimodular == GaussianRational(-1));
        // its printed maps compose to exactly the printed matrix (scale 1)
        const auto phi = parse_fractional_map(*fx->phi_expr, 'x');
        const auto psi = parse_fractional_map(*fx->psi_expr, 'y');
        const auto scale = scalar_multiple_of(compose(phi, psi), f);
        REQUIRE(scale.has_value());
        CHECK(*scale == GaussianRational(1));
        // the printed pair is coefficientwise conjugate, which is what makes
        // the composed matrix skew-conjugate-transpose
        CHECK(check_timerev_factor_condition(Factorization{phi, psi}));
    }

    SECTION("unknown names return null") {
        CHECK(fixture_by_name("example9") == nullptr);
    }
}
