#pragma once

#include <cstddef>
#include <vector>

#include "dtuples/errors.hpp"
#include "dtuples/gaussian.hpp"

namespace dtuples {

// Dense matrix over Q(i), row-major.
class ExactMatrix {
  public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const GaussianRational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& v : a_) {
            if (!v.is_zero()) return false;
        }
        return true;
    }

    ExactMatrix transposed() const {
        ExactMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<GaussianRational> a_;
};

// Exact rank via pivoted Gaussian elimination over the field Q(i). Pivot
// choice (first nonzero) cannot affect the result; arithmetic is exact.
inline std::size_t rank_exact(ExactMatrix m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank)
            for (std::size_t c = col; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        const GaussianRational inv = GaussianRational(1) / m.at(rank, col);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (m.at(r, col).is_zero()) continue;
            GaussianRational f = m.at(r, col) * inv;
            for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

// Expression of every row in the basis formed by the first two linearly
// independent rows: row j == coeff_a[j]*row_a + coeff_b[j]*row_b, exactly.
// By construction coeff_a[row_a] = 1, coeff_b[row_a] = 0, coeff_a[row_b] = 0,
// coeff_b[row_b] = 1.
struct RowBasisDecomposition {
    std::size_t row_a = 0;
    std::size_t row_b = 0;
    std::vector<GaussianRational> coeff_a;
    std::vector<GaussianRational> coeff_b;
};

// Requires rank exactly 2; otherwise throws RankNotTwo. Rank 0/1 is detected
// while searching for the basis rows, rank >= 3 by the exact re-verification
// of every row against the basis.
inline RowBasisDecomposition row_basis_decompose(const ExactMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    auto first_nonzero_col = [&](std::size_t r) -> std::size_t {
        for (std::size_t c = 0; c < cols; ++c)
            if (!m.at(r, c).is_zero()) return c;
        return cols;
    };

    std::size_t a = 0;
    while (a < rows && first_nonzero_col(a) == cols) ++a;
    if (a == rows) throw DomainError(Errc::RankNotTwo, "zero matrix has rank 0");

    const std::size_t p1 = first_nonzero_col(a);
    const GaussianRational inv_a = GaussianRational(1) / m.at(a, p1);

    auto proportional_to_a = [&](std::size_t r) {
        GaussianRational t = m.at(r, p1) * inv_a;
        for (std::size_t c = 0; c < cols; ++c)
            if (m.at(r, c) != t * m.at(a, c)) return false;
        return true;
    };

    std::size_t b = a + 1;
    while (b < rows && proportional_to_a(b)) ++b;
    if (b == rows) throw DomainError(Errc::RankNotTwo, "matrix has rank 1");

    // Column where (row_b - t*row_a) is first nonzero; together with p1 it
    // gives an invertible 2x2 system for the coefficients.
    GaussianRational tb = m.at(b, p1) * inv_a;
    std::size_t p2 = cols;
    for (std::size_t c = 0; c < cols; ++c) {
        if (m.at(b, c) - tb * m.at(a, c) != GaussianRational()) {
            p2 = c;
            break;
        }
    }
    const GaussianRational det =
        m.at(a, p1) * m.at(b, p2) - m.at(a, p2) * m.at(b, p1);

    RowBasisDecomposition out;
    out.row_a = a;
    out.row_b = b;
    out.coeff_a.resize(rows);
    out.coeff_b.resize(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        GaussianRational s =
            (m.at(r, p1) * m.at(b, p2) - m.at(r, p2) * m.at(b, p1)) / det;
        GaussianRational t =
            (m.at(a, p1) * m.at(r, p2) - m.at(a, p2) * m.at(r, p1)) / det;
        for (std::size_t c = 0; c < cols; ++c) {
            if (m.at(r, c) != s * m.at(a, c) + t * m.at(b, c))
                throw DomainError(Errc::RankNotTwo, "matrix has rank greater than 2");
        }
        out.coeff_a[r] = std::move(s);
        out.coeff_b[r] = std::move(t);
    }
    return out;
}

}  // namespace dtuples
