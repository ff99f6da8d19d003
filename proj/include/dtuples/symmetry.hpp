#pragma once

#include <optional>

#include "dtuples/correspondence.hpp"
#include "dtuples/factorize.hpp"
#include "dtuples/gaussian.hpp"

namespace dtuples {

// Structure of the coefficient matrix A under the three involutions of
// interest. All checks are exact; each witness is determined from the first
// nonzero entry (scanning x-major, highest powers first) and verified
// against every entry.
struct SymmetryReport {
    // A^T == A: the correspondence is invariant under swapping x and y.
    bool symmetric = false;
    // A^T == c*A for a scalar c (necessarily +1 or -1).
    std::optional<GaussianRational> swap_scalar;
    // A == w*B with B real entrywise; witness w is the first nonzero entry.
    bool real_up_to_constant = false;
    std::optional<GaussianRational> real_witness;
    // conj(A)^T == u*A with |u|^2 == 1 (u == -1 is the skew-Hermitian case).
    std::optional<GaussianRational> hermitian_unimodular;
};

inline SymmetryReport symmetry_report(const Correspondence& f) {
    const int d = f.d();
    SymmetryReport rep;

    // first nonzero entry in x-major, highest-powers-first order
    int fi = -1, fj = -1;
    for (int i = d; i >= 0 && fi < 0; --i)
        for (int j = d; j >= 0; --j)
            if (!f.coeff(i, j).is_zero()) {
                fi = i;
                fj = j;
                break;
            }

    rep.symmetric = true;
    for (int i = 0; i <= d && rep.symmetric; ++i)
        for (int j = 0; j <= d; ++j)
            if (f.coeff(i, j) != f.coeff(j, i)) {
                rep.symmetric = false;
                break;
            }

    {
        GaussianRational c = f.coeff(fj, fi) / f.coeff(fi, fj);
        bool ok = !c.is_zero();
        for (int i = 0; i <= d && ok; ++i)
            for (int j = 0; j <= d; ++j)
                if (f.coeff(j, i) != c * f.coeff(i, j)) {
                    ok = false;
                    break;
                }
        if (ok) rep.swap_scalar = c;
    }

    {
        const GaussianRational w = f.coeff(fi, fj);
        bool ok = true;
        for (int i = 0; i <= d && ok; ++i)
            for (int j = 0; j <= d; ++j)
                if (!(f.coeff(i, j) / w).is_real()) {
                    ok = false;
                    break;
                }
        rep.real_up_to_constant = ok;
        if (ok) rep.real_witness = w;
    }

    {
        // conj(A(j,i)) == u * A(i,j) for all i,j
        GaussianRational u = f.coeff(fj, fi).conj() / f.coeff(fi, fj);
        bool ok = !u.is_zero() && u * u.conj() == GaussianRational(1);
        for (int i = 0; i <= d && ok; ++i)
            for (int j = 0; j <= d; ++j)
                if (f.coeff(j, i).conj() != u * f.coeff(i, j)) {
                    ok = false;
                    break;
                }
        if (ok) rep.hermitian_unimodular = u;
    }

    return rep;
}

// Coefficient identity forcing a symmetric composed matrix:
// k_i*n_j + l_j*m_i == k_j*n_i + l_i*m_j for all i, j, where phi = k/l and
// psi = m/n. Equivalent to compose(fact) == compose(fact)^T.
inline bool check_symm_factor_condition(const Factorization& fact) {
    const int d = std::max(fact.phi.degree(), fact.psi.degree());
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) {
            const GaussianRational lhs =
                fact.phi.num().coeff(i) * fact.psi.den().coeff(j) +
                fact.phi.den().coeff(j) * fact.psi.num().coeff(i);
            const GaussianRational rhs =
                fact.phi.num().coeff(j) * fact.psi.den().coeff(i) +
                fact.phi.den().coeff(i) * fact.psi.num().coeff(j);
            if (lhs != rhs) return false;
        }
    return true;
}

// Coefficient identity tying the two maps under conjugation:
// k_i == conj(m_i) and l_i == conj(n_i) for all i. Holding, it makes the
// composed matrix skew-Hermitian up to the sign convention of the pair.
inline bool check_timerev_factor_condition(const Factorization& fact) {
    const int d = std::max(fact.phi.degree(), fact.psi.degree());
    for (int i = 0; i <= d; ++i) {
        if (fact.phi.num().coeff(i) != fact.psi.num().coeff(i).conj()) return false;
        if (fact.phi.den().coeff(i) != fact.psi.den().coeff(i).conj()) return false;
    }
    return true;
}

}  // namespace dtuples
