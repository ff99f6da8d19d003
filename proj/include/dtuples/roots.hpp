#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <vector>

#include "dtuples/errors.hpp"
#include "dtuples/sphere.hpp"

namespace dtuples {

// Coefficients whose magnitude stays below deadband * reference are treated
// as numerically zero.
inline constexpr double kCoeffDeadband = 1e-12;
// Quality target for polished roots: |p(r)| <= kResidualBound * sum_k |c_k| |r|^k.
inline constexpr double kResidualBound = 1e-8;

namespace detail {

inline std::complex<double> horner(const std::vector<std::complex<double>>& c,
                                   const std::complex<double>& z) {
    std::complex<double> r = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
    return r;
}

inline double eval_magnitude(const std::vector<std::complex<double>>& c, double az) {
    double s = 0.0, p = 1.0;
    for (const auto& ck : c) {
        s += std::abs(ck) * p;
        p *= az;
    }
    return s;
}

}  // namespace detail

inline double poly_residual(const std::vector<std::complex<double>>& c,
                            const std::complex<double>& r) {
    const double scale = detail::eval_magnitude(c, std::abs(r));
    return scale > 0 ? std::abs(detail::horner(c, r)) / scale : 0.0;
}

// All complex roots of the polynomial with coefficients c[k] (index =
// power), via eigenvalues of the monic companion matrix, each refined by a
// guarded Newton iteration. Leading coefficients below the relative
// deadband are trimmed; when pad_to_degree >= 0 the trimmed degree deficit
// is returned as that many points at infinity (the roots of the
// degree-pad_to_degree homogeneous completion). reference_scale, when
// nonnegative, is the magnitude against which "numerically zero polynomial"
// is judged; by default the polynomial's own largest coefficient is used.
inline std::vector<SpherePoint> poly_roots(const std::vector<std::complex<double>>& coeffs,
                                           int pad_to_degree = -1,
                                           double reference_scale = -1.0) {
    double cmax = 0.0;
    for (const auto& c : coeffs) cmax = std::max(cmax, std::abs(c));
    const double ref = reference_scale >= 0.0 ? reference_scale : cmax;
    if (cmax <= kCoeffDeadband * ref || cmax == 0.0)
        throw DomainError(Errc::NumericallyZeroPolynomial, "all coefficients below deadband");

    int deg = static_cast<int>(coeffs.size()) - 1;
    while (deg > 0 && std::abs(coeffs[static_cast<std::size_t>(deg)]) <= kCoeffDeadband * cmax) --deg;

    std::vector<SpherePoint> out;
    if (deg > 0) {
        const std::complex<double> lead = coeffs[static_cast<std::size_t>(deg)];
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(deg, deg);
        for (int i = 0; i < deg; ++i) m(i, deg - 1) = -coeffs[static_cast<std::size_t>(i)] / lead;
        for (int i = 1; i < deg; ++i) m(i, i - 1) = 1.0;
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);

        std::vector<std::complex<double>> trimmed(coeffs.begin(), coeffs.begin() + deg + 1);
        std::vector<std::complex<double>> dcoeffs(static_cast<std::size_t>(deg));
        for (int k = 1; k <= deg; ++k)
            dcoeffs[static_cast<std::size_t>(k - 1)] = trimmed[static_cast<std::size_t>(k)] * double(k);

        for (int i = 0; i < deg; ++i) {
            std::complex<double> r = es.eigenvalues()[i];
            // An m-fold root comes back as a symmetric star of m eigenvalues
            // whose mean recovers the root to first order; downstream cluster
            // collapse relies on that symmetry. Per-point polish would break
            // it (the accept/reject guard flips at the evaluation noise
            // floor), so only isolated roots are polished.
            double nearest = std::numeric_limits<double>::infinity();
            for (int j = 0; j < deg; ++j)
                if (j != i) nearest = std::min(nearest, std::abs(es.eigenvalues()[j] - r));
            if (nearest < 1e-3 * (1.0 + std::abs(r))) {
                out.push_back(SpherePoint::finite(r));
                continue;
            }
            // Guarded Newton polish on an isolated root: keep the best iterate.
            double best = std::abs(detail::horner(trimmed, r));
            std::complex<double> bestr = r;
            for (int it = 0; it < 8 && best > 0.0; ++it) {
                const std::complex<double> dp = detail::horner(dcoeffs, r);
                if (std::abs(dp) == 0.0) break;
                r -= detail::horner(trimmed, r) / dp;
                const double v = std::abs(detail::horner(trimmed, r));
                if (v < best) {
                    best = v;
                    bestr = r;
                } else {
                    break;
                }
            }
            out.push_back(SpherePoint::finite(bestr));
        }
    }
    if (pad_to_degree >= 0)
        for (int k = deg; k < pad_to_degree; ++k) out.push_back(SpherePoint::infinity());
    return canonical_order(std::move(out));
}

}  // namespace dtuples
