#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace dtuples;

namespace {

ExactMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    ExactMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(i, j) = GaussianRational(rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("exact rank on known matrices") {
    CHECK(rank_exact(from_rows({{0, 0}, {0, 0}})) == 0);
    CHECK(rank_exact(from_rows({{1, 2}, {2, 4}})) == 1);
    CHECK(rank_exact(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
    CHECK(rank_exact(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);  // classic rank-2
    // rank must be exact where floating point would waffle: tiny pivots
    ExactMatrix m(2, 2);
    m.at(0, 0) = GaussianRational(Rational(1, 1000000000L));
    m.at(0, 1) = GaussianRational(1);
    m.at(1, 0) = GaussianRational(1);
    m.at(1, 1) = GaussianRational(Rational(1000000000L, 1));
    CHECK(rank_exact(m) == 1);  // det = 1 - 1 = 0 exactly
}

TEST_CASE("rank of random outer-product sums is bounded by the term count") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 200; ++t) {
        std::uniform_int_distribution<int> sz(2, 5);
        const std::size_t n = static_cast<std::size_t>(sz(rng));
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = GaussianRational(0);
        std::uniform_int_distribution<int> terms(1, 2);
        const int k = terms(rng);
        for (int r = 0; r < k; ++r) {
            std::vector<GaussianRational> u(n), v(n);
            for (auto& e : u) e = testhelp::rand_gr(rng, 4);
            for (auto& e : v) e = testhelp::rand_gr(rng, 4);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m.at(i, j) += u[i] * v[j];
        }
        CHECK(rank_exact(m) <= k);
    }
}

TEST_CASE("row basis decomposition reconstructs every row") {
    std::mt19937_64 rng(32);
    int done = 0;
    while (done < 200) {
        std::uniform_int_distribution<int> sz(2, 6);
        const std::size_t n = static_cast<std::size_t>(sz(rng));
        ExactMatrix m(n, n);
        std::vector<GaussianRational> u1(n), v1(n), u2(n), v2(n);
        for (auto& e : u1) e = testhelp::rand_gr(rng, 4);
        for (auto& e : v1) e = testhelp::rand_gr(rng, 4);
        for (auto& e : u2) e = testhelp::rand_gr(rng, 4);
        for (auto& e : v2) e = testhelp::rand_gr(rng, 4);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = u1[i] * v1[j] + u2[i] * v2[j];
        if (rank_exact(m) != 2) continue;
        ++done;

        const RowBasisDecomposition dec = row_basis_decompose(m);
        REQUIRE(dec.coeff_a.size() == n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t j = 0; j < n; ++j)
                CHECK(m.at(r, j) ==
                      dec.coeff_a[r] * m.at(dec.row_a, j) + dec.coeff_b[r] * m.at(dec.row_b, j));
        // the basis rows express themselves trivially
        CHECK(dec.coeff_a[dec.row_a] == GaussianRational(1));
        CHECK(dec.coeff_b[dec.row_a] == GaussianRational(0));
        CHECK(dec.coeff_a[dec.row_b] == GaussianRational(0));
        CHECK(dec.coeff_b[dec.row_b] == GaussianRational(1));
    }
}

TEST_CASE("row basis decomposition rejects other ranks") {
    CHECK_THROWS_AS(row_basis_decompose(from_rows({{0, 0}, {0, 0}})), DomainError);
    CHECK_THROWS_AS(row_basis_decompose(from_rows({{1, 2}, {2, 4}})), DomainError);
    CHECK_THROWS_AS(row_basis_decompose(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})),
                    DomainError);
    try {
        row_basis_decompose(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
        FAIL("expected a throw");
    } catch (const DomainError& e) {
        CHECK(e.code() == Errc::RankNotTwo);
    }
}

TEST_CASE("transpose and equality") {
    const ExactMatrix m = from_rows({{1, 2}, {3, 4}});
    const ExactMatrix t = m.transposed();
    CHECK(t.at(0, 1) == GaussianRational(3));
    CHECK(t.transposed() == m);
    CHECK_FALSE(m == t);
}
