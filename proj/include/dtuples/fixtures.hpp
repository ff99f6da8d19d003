#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dtuples/classify.hpp"
#include "dtuples/correspondence.hpp"
#include "dtuples/errors.hpp"
#include "dtuples/factorize.hpp"
#include "dtuples/oracle.hpp"
#include "dtuples/parse.hpp"
#include "dtuples/symmetry.hpp"

namespace dtuples {

// A worked example embedded as printed: the expanded polynomial and/or the
// coefficient matrix exactly as displayed, the separated maps where given,
// and the expected classification/symmetry outcomes. Everything is stored
// as source text and parsed on demand so the stored form stays readable.
struct Fixture {
    std::string name;
    std::string summary;

    // the expanded polynomial, transcribed with explicit '*'
    std::optional<std::string> expression;
    // the coefficient matrix as displayed (row r = x^(d-r), col c = y^(d-c))
    std::optional<std::vector<std::vector<const char*>>> display_grid;
    // power form such as "(x*y + x + y + 2)^3", with its inner polynomial
    std::optional<std::string> compact_expression;
    std::optional<std::string> base_expression;
    // separated maps phi(x) = psi(y)
    std::optional<std::string> phi_expr;
    std::optional<std::string> psi_expr;

    enum class Kind { Rank2, PerfectPower };
    Kind kind = Kind::Rank2;
    int exponent = 1;  // expected power for Kind::PerfectPower

    // expected symmetry report
    bool symmetric = false;
    std::optional<const char*> swap_scalar;
    bool real_up_to_constant = false;
    std::optional<const char*> real_witness;
    std::optional<const char*> hermitian_u;

    // the printed root triples of this example contradict its printed maps;
    // the checks must detect that, not paper over it
    bool discrepancy_note = false;
};

namespace detail {

inline GaussianRational gr(const char* text) { return parse_polynomial(text).coeff(0, 0); }

inline Correspondence from_display_grid(const std::vector<std::vector<const char*>>& rows) {
    const std::size_t side = rows.size();
    std::vector<std::vector<GaussianRational>> grid(side, std::vector<GaussianRational>(side));
    for (std::size_t r = 0; r < side; ++r)
        for (std::size_t c = 0; c < side; ++c)
            grid[side - 1 - r][side - 1 - c] = gr(rows[r][c]);
    return Correspondence::from_grid(grid);
}

}  // namespace detail

inline const std::vector<Fixture>& all_fixtures() {
    static const std::vector<Fixture> fixtures = [] {
        std::vector<Fixture> v;

        {
            Fixture f;
            f.name = "example1";
            f.summary = "degree-5 complex correspondence with printed separated maps";
            f.expression =
                "5*x^5*y^5 + 5*x^5*y^4 + 10*x^5*y^3 + 7*x^5*y^2 + (1 + 6*i)*x^5*y + 11*x^5"
                " + 7*x^4*y^5 + 4*x^4*y^4 + 8*x^4*y^3 + 11*x^4*y^2 + (2 + 3*i)*x^4*y + 7*x^4"
                " + (9 - i)*x^3*y^5 + (3 - 2*i)*x^3*y^4 + (6 - 4*i)*x^3*y^3 + (15 - i)*x^3*y^2"
                " + 6*x^3*y + (3 - 5*i)*x^3"
                " + 15*x^2*y^5 + 10*x^2*y^4 + 20*x^2*y^3 + 23*x^2*y^2 + (4 + 9*i)*x^2*y + 19*x^2"
                " + 16*x*y^5 + 7*x*y^4 + 14*x*y^3 + 26*x*y^2 + (5 + 3*i)*x*y + 10*x"
                " + 7*y^5 + 9*y^4 + 18*y^3 + 9*y^2 + (1 + 12*i)*y + 21";
            f.display_grid = std::vector<std::vector<const char*>>{
                {"5", "5", "10", "7", "1 + 6*i", "11"},
                {"7", "4", "8", "11", "2 + 3*i", "7"},
                {"9 - i", "3 - 2*i", "6 - 4*i", "15 - i", "6", "3 - 5*i"},
                {"15", "10", "20", "23", "4 + 9*i", "19"},
                {"16", "7", "14", "26", "5 + 3*i", "10"},
                {"7", "9", "18", "9", "1 + 12*i", "21"},
            };
            f.phi_expr =
                "(x^5 + 2*x^4 + 3*x^3 + 4*x^2 + 5*x + 1)/(2*x^5 + x^4 - i*x^3 + 3*x^2 + x + 4)";
            f.psi_expr =
                "-(y^5 + 2*y^4 + 4*y^3 + y^2 + 3*i*y + 5)/(3*y^5 + y^4 + 2*y^3 + 5*y^2 + y + 1)";
            f.kind = Fixture::Kind::Rank2;
            v.push_back(std::move(f));
        }

        {
            Fixture f;
            f.name = "example2a";
            f.summary = "cube of a degree-1 correspondence (map of 3-tuples)";
            f.expression =
                "x^3*y^3 + 3*x^3*y^2 + 3*x^3*y + x^3 + 3*x^2*y^3 + 12*x^2*y^2 + 15*x^2*y + 6*x^2"
                " + 3*x*y^3 + 15*x*y^2 + 24*x*y + 12*x + y^3 + 6*y^2 + 12*y + 8";
            f.compact_expression = "(x*y + x + y + 2)^3";
            f.base_expression = "x*y + x + y + 2";
            f.kind = Fixture::Kind::PerfectPower;
            f.exponent = 3;
            f.symmetric = true;
            f.swap_scalar = "1";
            f.real_up_to_constant = true;
            f.real_witness = "1";
            f.hermitian_u = "1";
            v.push_back(std::move(f));
        }

        {
            Fixture f;
            f.name = "example2b";
            f.summary = "square of a degree-2 correspondence (map of 4-tuples)";
            f.expression =
                "x^4*y^4 + 2*x^4*y^2 + x^4 + 2*x^3*y^4 + 4*x^3*y^2 + 2*x^3 + 3*x^2*y^4"
                " + 8*x^2*y^2 + 5*x^2 + 2*x*y^4 + 6*x*y^2 + 4*x + y^4 + 4*y^2 + 4";
            f.compact_expression = "(x^2*y^2 + x^2 + x*y^2 + x + y^2 + 2)^2";
            f.base_expression = "x^2*y^2 + x^2 + x*y^2 + x + y^2 + 2";
            f.kind = Fixture::Kind::PerfectPower;
            f.exponent = 2;
            f.real_up_to_constant = true;
            f.real_witness = "1";
            v.push_back(std::move(f));
        }

        {
            Fixture f;
            f.name = "example3";
            f.summary = "symmetric coefficient matrix; printed triples disagree with printed maps";
            f.expression =
                "3*x^3*y^3 + 10*x^3*y^2 - 51*x^3*y - 26*x^3 + 10*x^2*y^3 - 32*x^2*y^2"
                " + 26*x^2*y - 68*x^2 - 51*x*y^3 + 26*x*y^2 + 279*x*y + 386*x"
                " - 26*y^3 - 68*y^2 + 386*y + 220";
            f.phi_expr = "(x^3 - 6*x^2 + 11*x - 6)/(-x^3 - 8*x^2 + 31*x + 10)";
            f.psi_expr = "(2*y^3 + 2*y^2 - 20*y - 16)/(y^3 + 8*y^2 - 31*y - 10)";
            f.kind = Fixture::Kind::Rank2;
            f.symmetric = true;
            f.swap_scalar = "1";
            f.real_up_to_constant = true;
            f.real_witness = "3";
            f.hermitian_u = "1";
            f.discrepancy_note = true;
            v.push_back(std::move(f));
        }

        {
            Fixture f;
            f.name = "example4";
            f.summary = "real coefficient matrix from real separated maps";
            f.expression =
                "3*x^4*y^4 + 16*x^4*y^3 + 9*x^4*y^2 + 8*x^4*y + 20*x^4 + 8*x^3*y^4"
                " + 31*x^3*y^3 + 31*x^3*y^2 + 33*x^3*y + 44*x^3 + 11*x^2*y^4 + 72*x^2*y^3"
                " + 25*x^2*y^2 + 16*x^2*y + 84*x^2 + 5*x*y^4 + 15*x*y^3 + 22*x*y^2 + 25*x*y"
                " + 24*x + 8*y^4 + 51*y^3 + 19*y^2 + 13*y + 60";
            f.phi_expr = "(2*x^4 + 3*x^3 + 10*x^2 + x + 7)/(x^4 + 5*x^3 + x^2 + 4*x + 1)";
            f.psi_expr = "-(y^4 + 2*y^3 + 5*y^2 + 6*y + 4)/(y^4 + 7*y^3 + 2*y^2 + y + 8)";
            f.kind = Fixture::Kind::Rank2;
            f.real_up_to_constant = true;
            f.real_witness = "3";
            v.push_back(std::move(f));
        }

        {
            Fixture f;
            f.name = "example5";
            f.summary = "skew-Hermitian coefficient matrix (conjugate-transpose = -A)";
            f.display_grid = std::vector<std::vector<const char*>>{
                {"28*i", "6*i - 25", "19*i - 7", "-31"},
                {"25 + 6*i", "12*i", "17 + 5*i", "-15 + 4*i"},
                {"7 + 19*i", "-17 + 5*i", "12*i", "-2*i - 28"},
                {"31", "15 + 4*i", "28 - 2*i", "-20*i"},
            };
            f.phi_expr =
                "(2*i*x^3 + 3*x^2 + (1 + i)*x + 5)/(7*x^3 + (3 - 2*i)*x^2 + 6*x + 2*i)";
            f.psi_expr =
                "(-2*i*y^3 + 3*y^2 + (1 - i)*y + 5)/(7*y^3 + (3 + 2*i)*y^2 + 6*y - 2*i)";
            f.kind = Fixture::Kind::Rank2;
            f.hermitian_u = "-1";
            v.push_back(std::move(f));
        }

        return v;
    }();
    return fixtures;
}

inline const Fixture* fixture_by_name(const std::string& name) {
    for (const auto& f : all_fixtures())
        if (f.name == name) return &f;
    return nullptr;
}

// The correspondence a fixture describes (from its expression, or from its
// displayed matrix when no expansion is printed).
inline Correspondence fixture_correspondence(const Fixture& fx) {
    if (fx.expression) return Correspondence::from_bipoly(parse_polynomial(*fx.expression));
    return detail::from_display_grid(*fx.display_grid);
}

struct FixtureResult {
    std::string name;
    bool pass = true;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
};

// Runs every check a fixture's stored data supports: cross-agreement of its
// stored forms, expected classification, compose/factorize round-trips,
// expected symmetry report, and the numeric oracle.
inline FixtureResult run_fixture_checks(const Fixture& fx, int samples = 100, double tol = 1e-6,
                                        std::uint64_t seed = 0) {
    FixtureResult res;
    res.name = fx.name;
    auto fail = [&](std::string msg) {
        res.pass = false;
        res.failures.push_back(std::move(msg));
    };

    Correspondence f = fixture_correspondence(fx);

    if (fx.expression && fx.display_grid) {
        if (!(detail::from_display_grid(*fx.display_grid) == f))
            fail("printed matrix disagrees with printed polynomial");
    }
    if (fx.compact_expression) {
        if (!(Correspondence::from_bipoly(parse_polynomial(*fx.compact_expression)) == f))
            fail("power form disagrees with printed expansion");
    }

    const Classification cls = classify(f);
    if (fx.kind == Fixture::Kind::Rank2) {
        if (!cls.is_rank2()) fail("expected a rank-2 classification");
    } else {
        if (!cls.is_perfect_power()) {
            fail("expected a perfect-power classification");
        } else {
            const auto& pp = cls.perfect_power();
            if (pp.exponent != fx.exponent)
                fail("expected exponent " + std::to_string(fx.exponent) + ", got " +
                     std::to_string(pp.exponent));
            if (!(pp.scale == GaussianRational(1))) fail("expected power scale 1");
            if (fx.base_expression &&
                !(Correspondence::from_bipoly(parse_polynomial(*fx.base_expression)) == pp.base))
                fail("extracted base disagrees with printed base");
            if (!pp.base_classification->is_map_of_tuples()) fail("base must be a map of tuples");
        }
    }

    if (fx.phi_expr && fx.psi_expr) {
        const FractionalMap phi = parse_fractional_map(*fx.phi_expr, 'x');
        const FractionalMap psi = parse_fractional_map(*fx.psi_expr, 'y');
        const Correspondence composed = compose(phi, psi);
        if (!(composed == f)) fail("printed maps do not compose to the printed coefficients");
    }

    if (cls.is_rank2()) {
        const auto& r2 = cls.rank2();
        if (r2.scale.is_zero()) fail("factorization round-trip scale is zero");
        if (!verify_factorization(f, r2.factorization, samples, tol, seed))
            fail("numeric check rejects the constructed factorization");
    }

    const SymmetryReport rep = symmetry_report(f);
    if (rep.symmetric != fx.symmetric) fail("symmetric flag mismatch");
    if (bool(rep.swap_scalar) != bool(fx.swap_scalar) ||
        (fx.swap_scalar && !(*rep.swap_scalar == detail::gr(*fx.swap_scalar))))
        fail("swap-scalar mismatch");
    if (rep.real_up_to_constant != fx.real_up_to_constant) fail("realness flag mismatch");
    if (bool(rep.real_witness) != bool(fx.real_witness) ||
        (fx.real_witness && !(*rep.real_witness == detail::gr(*fx.real_witness))))
        fail("realness witness mismatch");
    if (bool(rep.hermitian_unimodular) != bool(fx.hermitian_u) ||
        (fx.hermitian_u && !(*rep.hermitian_unimodular == detail::gr(*fx.hermitian_u))))
        fail("conjugate-transpose scalar mismatch");

    try {
        const OracleVerdict ov = verify_map_of_tuples(f, samples, tol, seed);
        if (!ov.pass) fail("numeric oracle found a non-matching back-fiber");
    } catch (const DomainError& e) {
        fail(std::string("numeric oracle aborted: ") + e.what());
    }

    if (fx.discrepancy_note) {
        // The printed maps relate the x-triple of phi's numerator roots to a
        // printed y-triple over the same map value 0, but the printed y-triple
        // fails psi's numerator; the check passes only when that is detected.
        const FractionalMap phi = parse_fractional_map(*fx.phi_expr, 'x');
        const FractionalMap psi = parse_fractional_map(*fx.psi_expr, 'y');
        bool x_side_ok = true;
        for (long r = 1; r <= 3; ++r)
            x_side_ok = x_side_ok && phi.num().eval(GaussianRational(r)).is_zero();
        if (!x_side_ok) fail("expected x-side numerator roots {1, 2, 3}");
        const GaussianRational at_minus1 = psi.num().eval(GaussianRational(-1));
        if (at_minus1 == GaussianRational(4)) {
            res.notes.push_back(
                "printed y-triple is inconsistent: psi numerator at y = -1 evaluates to 4, not 0");
        } else {
            fail("expected psi numerator to evaluate to 4 at y = -1 (printed-triple discrepancy)");
        }
    }

    return res;
}

}  // namespace dtuples
