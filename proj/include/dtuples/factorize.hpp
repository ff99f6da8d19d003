#pragma once

#include <utility>
#include <vector>

#include "dtuples/correspondence.hpp"
#include "dtuples/errors.hpp"
#include "dtuples/exact_matrix.hpp"
#include "dtuples/fractional_map.hpp"

namespace dtuples {

// Separated form of a correspondence: f(x,y) = 0 iff phi(x) = psi(y).
struct Factorization {
    FractionalMap phi;
    FractionalMap psi;
};

struct FactorizeResult {
    Factorization factorization;
    // compose(phi, psi) == scale * f, exactly; always nonzero.
    GaussianRational scale;
};

// Construction for a rank-2 coefficient matrix. Writing f as
//   sum_r x^(d-r) * (Row_r . Y),  Y = (y^d, ..., y, 1),
// and expressing every row in the first two independent rows,
// Row_r = s_r*Row_a + t_r*Row_b, the equation f = 0 collapses to
//   p(x) * (Row_a . Y) == -q(x) * (Row_b . Y)
// with p = sum s_r x^(d-r), q = sum t_r x^(d-r). Hence
//   phi = p/q  and  psi = -(Row_b . Y)/(Row_a . Y).
// Throws RankNotTwo when no two-row basis exists, InternalNonreduced if a
// constructed map has a non-trivial common factor (for a validated input
// that would mean a line component, which validation has excluded).
inline FactorizeResult factorize(const Correspondence& f) {
    const int d = f.d();
    const ExactMatrix m = f.display_matrix();
    const RowBasisDecomposition dec = row_basis_decompose(m);

    std::vector<GaussianRational> num_phi(static_cast<std::size_t>(d) + 1);
    std::vector<GaussianRational> den_phi(static_cast<std::size_t>(d) + 1);
    std::vector<GaussianRational> num_psi(static_cast<std::size_t>(d) + 1);
    std::vector<GaussianRational> den_psi(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        const std::size_t r = static_cast<std::size_t>(d - k);
        num_phi[static_cast<std::size_t>(k)] = dec.coeff_a[r];
        den_phi[static_cast<std::size_t>(k)] = dec.coeff_b[r];
        num_psi[static_cast<std::size_t>(k)] = -m.at(dec.row_b, r);
        den_psi[static_cast<std::size_t>(k)] = m.at(dec.row_a, r);
    }

    UniPoly pn(std::move(num_phi)), pd(std::move(den_phi));
    UniPoly qn(std::move(num_psi)), qd(std::move(den_psi));
    if (!pn.is_zero() && !pd.is_zero() && unipoly_gcd(pn, pd).degree() > 0)
        throw DomainError(Errc::InternalNonreduced, "x-side maps share a factor");
    if (!qn.is_zero() && !qd.is_zero() && unipoly_gcd(qn, qd).degree() > 0)
        throw DomainError(Errc::InternalNonreduced, "y-side maps share a factor");

    Factorization fact{FractionalMap::make(std::move(pn), std::move(pd)),
                       FractionalMap::make(std::move(qn), std::move(qd))};

    const Correspondence round = compose(fact.phi, fact.psi);
    const auto scale = scalar_multiple_of(round, f);
    if (!scale)
        throw DomainError(Errc::InternalNonreduced, "factorization does not reproduce the input");
    return {std::move(fact), *scale};
}

}  // namespace dtuples
