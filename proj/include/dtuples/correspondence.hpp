#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dtuples/bipoly.hpp"
#include "dtuples/errors.hpp"
#include "dtuples/exact_matrix.hpp"
#include "dtuples/fractional_map.hpp"
#include "dtuples/gaussian.hpp"

namespace dtuples {

// Degree-d polynomial correspondence f(x,y) = 0, held as the square
// coefficient grid coeff(i,j) = coefficient of x^i y^j, 0 <= i,j <= d.
// Validated on construction:
//   - the matrix is not zero,
//   - d >= 1 and both the x^d row and the y^d column carry a nonzero entry
//     (f is generically d-valued in each variable, so the curve meets both
//     families of lines in d points counted with multiplicity),
//   - the coefficient content in each variable is constant (a non-constant
//     content is a line component {a} x C or C x {b} of the zero set).
class Correspondence {
  public:
    static Correspondence from_bipoly(const BiPoly& f) {
        if (f.is_zero()) throw DomainError(Errc::ZeroMatrix, "zero polynomial");
        const int d = std::max(f.degree_x(), f.degree_y());
        if (d < 1) throw DomainError(Errc::DegenerateDegree, "degree 0 in both variables");
        Correspondence c(d);
        for (int i = 0; i <= d; ++i)
            for (int j = 0; j <= d; ++j) c.at(i, j) = f.coeff(i, j);
        c.validate();
        return c;
    }

    // grid[i][j] = coefficient of x^i y^j; the grid must be square of side
    // d+1 >= 2
    static Correspondence from_grid(const std::vector<std::vector<GaussianRational>>& grid) {
        const std::size_t side = grid.size();
        if (side < 2) {
            bool zero = true;
            for (const auto& row : grid)
                for (const auto& v : row) zero = zero && v.is_zero();
            throw DomainError(zero ? Errc::ZeroMatrix : Errc::DegenerateDegree,
                              "coefficient matrix must have side at least 2");
        }
        Correspondence c(static_cast<int>(side) - 1);
        for (std::size_t i = 0; i < side; ++i) {
            if (grid[i].size() != side)
                throw DomainError(Errc::DegenerateDegree, "coefficient matrix must be square");
            for (std::size_t j = 0; j < side; ++j) c.at(static_cast<int>(i), static_cast<int>(j)) = grid[i][j];
        }
        c.validate();
        return c;
    }

    int d() const { return d_; }

    const GaussianRational& coeff(int i, int j) const { return a_[idx(i, j)]; }

    BiPoly to_bipoly() const {
        std::vector<UniPoly> slices(static_cast<std::size_t>(d_) + 1);
        for (int j = 0; j <= d_; ++j) {
            std::vector<GaussianRational> col(static_cast<std::size_t>(d_) + 1);
            for (int i = 0; i <= d_; ++i) col[static_cast<std::size_t>(i)] = coeff(i, j);
            slices[static_cast<std::size_t>(j)] = UniPoly(std::move(col));
        }
        return BiPoly(std::move(slices));
    }

    // Display-layout matrix: entry (r, c) is the coefficient of
    // x^(d-r) y^(d-c), i.e. row r collects the coefficients of x^(d-r)
    // against (y^d, ..., y, 1).
    ExactMatrix display_matrix() const {
        ExactMatrix m(static_cast<std::size_t>(d_) + 1, static_cast<std::size_t>(d_) + 1);
        for (int r = 0; r <= d_; ++r)
            for (int c = 0; c <= d_; ++c) m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = coeff(d_ - r, d_ - c);
        return m;
    }

    Correspondence swap_variables() const {
        Correspondence c(d_);
        for (int i = 0; i <= d_; ++i)
            for (int j = 0; j <= d_; ++j) c.at(i, j) = coeff(j, i);
        c.validate();
        return c;
    }

    Correspondence conjugate_coeffs() const {
        Correspondence c(d_);
        for (int i = 0; i <= d_; ++i)
            for (int j = 0; j <= d_; ++j) c.at(i, j) = coeff(i, j).conj();
        c.validate();
        return c;
    }

    friend bool operator==(const Correspondence& a, const Correspondence& b) {
        return a.d_ == b.d_ && a.a_ == b.a_;
    }

  private:
    explicit Correspondence(int d)
        : d_(d), a_(static_cast<std::size_t>(d + 1) * static_cast<std::size_t>(d + 1)) {}

    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(d_ + 1) + static_cast<std::size_t>(j);
    }
    GaussianRational& at(int i, int j) { return a_[idx(i, j)]; }

    void validate() const {
        bool any = false;
        for (const auto& v : a_) any = any || !v.is_zero();
        if (!any) throw DomainError(Errc::ZeroMatrix, "zero coefficient matrix");

        bool row_d = false, col_d = false;
        for (int j = 0; j <= d_; ++j) row_d = row_d || !coeff(d_, j).is_zero();
        for (int i = 0; i <= d_; ++i) col_d = col_d || !coeff(i, d_).is_zero();
        if (!row_d)
            throw DomainError(Errc::DegenerateDegree, "no x^d term: not generically d-valued in x");
        if (!col_d)
            throw DomainError(Errc::DegenerateDegree, "no y^d term: not generically d-valued in y");

        const BiPoly f = to_bipoly();
        if (bipoly_content_y(f).degree() > 0)
            throw DomainError(Errc::LineComponent, "vertical line component: non-constant content in x");
        if (bipoly_content_x(f).degree() > 0)
            throw DomainError(Errc::LineComponent, "horizontal line component: non-constant content in y");
    }

    int d_;
    std::vector<GaussianRational> a_;
};

inline Correspondence new_correspondence(const std::vector<std::vector<GaussianRational>>& grid) {
    return Correspondence::from_grid(grid);
}

// Coefficient matrix of the pair: the equation num_phi(x)/den_phi(x) =
// num_psi(y)/den_psi(y) cleared of denominators has coefficient
// A[i][j] = num_phi[i]*den_psi[j] - den_phi[i]*num_psi[j]. The result passes
// full validation.
inline Correspondence compose(const FractionalMap& phi, const FractionalMap& psi) {
    if (phi.degree() != psi.degree())
        throw DomainError(Errc::DegreeMismatch, "fractional maps of different degree");
    const int d = phi.degree();
    std::vector<std::vector<GaussianRational>> grid(
        static_cast<std::size_t>(d) + 1,
        std::vector<GaussianRational>(static_cast<std::size_t>(d) + 1));
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j)
            grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                phi.num().coeff(i) * psi.den().coeff(j) - phi.den().coeff(i) * psi.num().coeff(j);
    return Correspondence::from_grid(grid);
}

// c with g == c*f when the two coefficient matrices are exact scalar
// multiples of one another.
inline std::optional<GaussianRational> scalar_multiple_of(const Correspondence& g,
                                                          const Correspondence& f) {
    if (g.d() != f.d()) return std::nullopt;
    GaussianRational c;
    bool found = false;
    for (int i = f.d(); i >= 0 && !found; --i) {
        for (int j = f.d(); j >= 0 && !found; --j) {
            if (!f.coeff(i, j).is_zero()) {
                c = g.coeff(i, j) / f.coeff(i, j);
                found = true;
            }
        }
    }
    if (!found || c.is_zero()) return std::nullopt;
    for (int i = 0; i <= f.d(); ++i)
        for (int j = 0; j <= f.d(); ++j)
            if (g.coeff(i, j) != c * f.coeff(i, j)) return std::nullopt;
    return c;
}

}  // namespace dtuples
