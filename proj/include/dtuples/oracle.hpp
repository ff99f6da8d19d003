#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "dtuples/assignment.hpp"
#include "dtuples/correspondence.hpp"
#include "dtuples/errors.hpp"
#include "dtuples/factorize.hpp"
#include "dtuples/roots.hpp"
#include "dtuples/sphere.hpp"

namespace dtuples {

// Samples whose leading fiber coefficient loses this much relative
// magnitude are non-generic and are redrawn.
inline constexpr double kLeadingCoeffCutoff = 1e-9;
// Radius of the uniform sampling disk.
inline constexpr double kSampleRadius = 3.0;
// Base linking radius (chordal): root clusters tighter than this are
// collapsed to their centroid repeated with multiplicity. The companion-
// matrix images of an m-fold root scatter like eps^(1/m) in a symmetric
// star whose mean recovers the root to first order, so centroids are
// comparable at tolerances far below the scatter; wide stars from
// ill-conditioned coefficients link through the per-root inclusion radii
// on top of this floor.
inline double cluster_radius(double tol) { return std::max(10.0 * tol, 1e-4); }
// A cross-cluster pair closer than this multiple of its linking threshold
// makes the clustering ambiguous; such a sample is rejected as non-generic
// instead of guessing multiplicities.
inline constexpr double kClusterGapFactor = 5.0;
// Safety margin on the per-root Newton inclusion radii when linking roots
// into clusters. The scatter star of an exact m-fold root has adjacent
// points about 2 sin(pi/m) scatters apart while their inclusion radii come
// out near one scatter each, so a factor 3 links stars with room to spare.
inline constexpr double kInclusionSafetyFactor = 3.0;
// Hard cap on any inclusion radius: beyond this the root location is too
// uncertain to collapse and the gap test rejects the sample instead.
inline constexpr double kMaxClusterRadius = 1e-2;

// Fiber of the correspondence over one point: exactly d sphere points in
// canonical order, repeated according to multiplicity, with degree deficit
// filled by points at infinity.
struct Fiber {
    std::vector<SpherePoint> points;
};

namespace detail {

struct EvaluatedPoly {
    std::vector<std::complex<double>> coeffs;
    double scale;  // cancellation-free magnitude bound, for deadbands
};

// Coefficients of y -> f(x0, y) (or x -> f(x, y0) when transposed is true).
inline EvaluatedPoly eval_fiber_poly(const Correspondence& f, const SpherePoint& p, bool transposed) {
    const int d = f.d();
    EvaluatedPoly out;
    out.coeffs.assign(static_cast<std::size_t>(d) + 1, {0.0, 0.0});
    out.scale = 0.0;
    auto coeff = [&](int i, int j) { return transposed ? f.coeff(j, i) : f.coeff(i, j); };
    if (p.infinite) {
        // row of the top power: the finite part of the fiber over infinity
        for (int j = 0; j <= d; ++j) out.coeffs[static_cast<std::size_t>(j)] = coeff(d, j).to_complex();
        for (const auto& c : out.coeffs) out.scale = std::max(out.scale, std::abs(c));
        return out;
    }
    const std::complex<double> z = p.z;
    const double az = std::abs(z);
    for (int j = 0; j <= d; ++j) {
        std::complex<double> acc = 0.0;
        double mag = 0.0, pw = 1.0;
        std::complex<double> zp = 1.0;
        for (int i = 0; i <= d; ++i) {
            const std::complex<double> a = coeff(i, j).to_complex();
            acc += a * zp;
            mag += std::abs(a) * pw;
            zp *= z;
            pw *= az;
        }
        out.coeffs[static_cast<std::size_t>(j)] = acc;
        out.scale = std::max(out.scale, mag);
    }
    return out;
}

// Per-root chordal inclusion radius: degree * residual / |p'(z)|, a Newton
// correction scaled by the worst-case root count it could be shared with.
// The residual treats the evaluated coefficients as carrying the rounding
// fuzz of their computation, |p(z)| + eps * scale * sum |z|^j; the
// coefficient term dominates when heavy cancellation hides an exact
// multiple root, so a scatter-star point of an m-fold root gets a radius at
// or above its star size while a well-conditioned simple root keeps a
// machine-size disk. Disk overlap is therefore a scale-free same-root test.
// Exact infinities (degree-deficit padding) carry radius zero and link
// through the base radius alone.
inline std::vector<double> inclusion_radii(const EvaluatedPoly& p,
                                           const std::vector<SpherePoint>& pts) {
    const int deg = static_cast<int>(p.coeffs.size()) - 1;
    const double eps = std::numeric_limits<double>::epsilon();
    std::vector<double> out(pts.size(), 0.0);
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (pts[k].infinite) continue;
        const std::complex<double> z = pts[k].z;
        const double az = std::abs(z);
        std::complex<double> pv = 0.0, dv = 0.0;
        double mz = 0.0;
        for (int j = deg; j >= 0; --j) {
            dv = dv * z + pv;
            pv = pv * z + p.coeffs[static_cast<std::size_t>(j)];
            mz = mz * az + 1.0;
        }
        double nr = kMaxClusterRadius;
        const double ad = std::abs(dv);
        const double resid = std::abs(pv) + eps * p.scale * mz;
        if (ad > 0.0 && std::isfinite(ad)) {
            nr = static_cast<double>(deg) * resid / ad;
            if (!std::isfinite(nr)) nr = kMaxClusterRadius;
        }
        // euclidean radius to chordal at z
        const double conv = 2.0 / (1.0 + std::norm(z));
        const double chordal = std::isfinite(conv) ? nr * conv : 0.0;
        out[k] = std::min(kMaxClusterRadius, chordal);
    }
    return out;
}

// Collapse root clusters to centroids (multiplicity preserved as repeated
// entries). Two roots link when they sit within the base radius r or within
// kInclusionSafetyFactor times their combined inclusion radii, whichever is
// larger; the latter keeps the scatter star of an m-fold root (radius
// ~ eps^(1/m), coefficient-scale dependent) in one cluster without
// loosening the test for well-conditioned roots. Returns false when some
// cross-cluster pair lies inside the gap zone
// [threshold, kClusterGapFactor*threshold): such a sample is ambiguous and
// the caller redraws it.
inline bool collapse_clusters(std::vector<SpherePoint>& pts, double r,
                              const std::vector<double>& incl) {
    const std::size_t n = pts.size();
    auto threshold = [&](std::size_t i, std::size_t j) {
        return std::max(r, kInclusionSafetyFactor * (incl[i] + incl[j]));
    };
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (chordal_distance(pts[i], pts[j]) <= threshold(i, j)) parent[find(i)] = find(j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (find(i) == find(j)) continue;
            if (chordal_distance(pts[i], pts[j]) < kClusterGapFactor * threshold(i, j))
                return false;
        }
    std::vector<char> done(n, 0);
    std::vector<SpherePoint> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (done[i]) continue;
        std::vector<std::size_t> members;
        for (std::size_t j = 0; j < n; ++j)
            if (find(j) == find(i)) {
                members.push_back(j);
                done[j] = 1;
            }
        bool any_inf = false;
        std::complex<double> sum = 0.0;
        for (std::size_t m : members) {
            if (pts[m].infinite)
                any_inf = true;
            else
                sum += pts[m].z;
        }
        SpherePoint rep = any_inf ? SpherePoint::infinity()
                                  : SpherePoint::finite(sum / double(members.size()));
        for (std::size_t m = 0; m < members.size(); ++m) out.push_back(rep);
    }
    pts = canonical_order(std::move(out));
    return true;
}

// Shared fiber computation that hands the evaluated coefficients back for
// cluster analysis.
inline Fiber fiber_roots(const Correspondence& f, const SpherePoint& p, bool transposed,
                         EvaluatedPoly& ep) {
    ep = eval_fiber_poly(f, p, transposed);
    double cmax = 0.0;
    for (const auto& c : ep.coeffs) cmax = std::max(cmax, std::abs(c));
    if (cmax <= kCoeffDeadband * ep.scale || ep.scale == 0.0)
        throw DomainError(Errc::DegenerateFiber, "fiber polynomial vanishes numerically");
    return Fiber{poly_roots(ep.coeffs, f.d(), ep.scale)};
}

}  // namespace detail

// Fiber over x = x0 in the y-direction: the d solutions of f(x0, y) = 0 on
// the sphere (with multiplicity; infinity fills the degree deficit). Over
// x0 = infinity the finite part is cut out by the x^d coefficient row.
// Throws DegenerateFiber when every coefficient vanishes numerically, which
// a validated correspondence cannot produce at a generic point.
inline Fiber fiber_y(const Correspondence& f, const SpherePoint& x0) {
    detail::EvaluatedPoly p;
    return detail::fiber_roots(f, x0, false, p);
}

// Fiber over y = y0 in the x-direction.
inline Fiber fiber_x(const Correspondence& f, const SpherePoint& y0) {
    detail::EvaluatedPoly p;
    return detail::fiber_roots(f, y0, true, p);
}

struct MatchResult {
    bool matched = false;
    // largest chordal distance over the optimal pairing
    double max_pair_distance = 0.0;
};

// Multiset comparison under the chordal metric: minimum-cost perfect
// matching (optimal assignment; greedy pairing is wrong for d > 2), matched
// iff every matched pair is within tol.
inline MatchResult multiset_match(const Fiber& a, const Fiber& b, double tol) {
    if (a.points.size() != b.points.size())
        throw DomainError(Errc::LengthMismatch, "fibers of different size");
    const std::size_t n = a.points.size();
    if (n == 0) return {true, 0.0};
    std::vector<std::vector<double>> cost(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cost[i][j] = chordal_distance(a.points[i], b.points[j]);
    const std::vector<int> assign = min_cost_assignment(cost);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, cost[i][static_cast<std::size_t>(assign[i])]);
    return {worst <= tol, worst};
}

// One probe of the d-tuple property at a start point x1: compute the
// forward fiber, pull each of its d points back, and require all back-fibers
// to agree as multisets (each must also contain x1). max_mismatch is the
// largest distance involved in those comparisons; the verdict is
// max_mismatch <= tol.
struct TupleWitness {
    SpherePoint start;
    Fiber forward;
    std::vector<Fiber> back;
    bool verdict = false;
    double max_mismatch = 0.0;
};

// Throws DegenerateSample when the root clustering at this start point is
// too ambiguous to trust; callers sample elsewhere.
inline TupleWitness d_tuple_witness(const Correspondence& f, const SpherePoint& x1, double tol) {
    const double r = cluster_radius(tol);
    TupleWitness w;
    w.start = x1;
    detail::EvaluatedPoly ep;
    w.forward = detail::fiber_roots(f, x1, false, ep);
    if (!detail::collapse_clusters(w.forward.points, r, detail::inclusion_radii(ep, w.forward.points)))
        throw DomainError(Errc::DegenerateSample, "ambiguous root cluster in forward fiber");
    for (const auto& y : w.forward.points) {
        Fiber b = detail::fiber_roots(f, y, true, ep);
        if (!detail::collapse_clusters(b.points, r, detail::inclusion_radii(ep, b.points)))
            throw DomainError(Errc::DegenerateSample, "ambiguous root cluster in back fiber");
        w.back.push_back(std::move(b));
    }
    double mm = 0.0;
    for (std::size_t j = 0; j < w.back.size(); ++j) {
        if (j > 0) mm = std::max(mm, multiset_match(w.back[j], w.back[0], tol).max_pair_distance);
        double contain = std::numeric_limits<double>::infinity();
        for (const auto& p : w.back[j].points) contain = std::min(contain, chordal_distance(p, x1));
        mm = std::max(mm, contain);
    }
    w.max_mismatch = mm;
    w.verdict = mm <= tol;
    return w;
}

struct OracleVerdict {
    bool pass = false;
    int samples_used = 0;
    int samples_rejected = 0;
    std::optional<TupleWitness> worst;
};

namespace detail {

inline std::complex<double> sample_disk(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double rad = kSampleRadius * std::sqrt(u01(rng));
    const double th = 2.0 * M_PI * u01(rng);
    return std::polar(rad, th);
}

// |P(x1)| < kLeadingCoeffCutoff * (cancellation-free magnitude): the top
// fiber coefficient nearly vanishes, so the sample sits near a degree-drop
// locus and is non-generic.
inline bool leading_coeff_degenerate(const Correspondence& f, const std::complex<double>& x1) {
    const int d = f.d();
    std::complex<double> acc = 0.0;
    double mag = 0.0, pw = 1.0;
    std::complex<double> zp = 1.0;
    for (int i = 0; i <= d; ++i) {
        const std::complex<double> a = f.coeff(i, d).to_complex();
        acc += a * zp;
        mag += std::abs(a) * pw;
        zp *= x1;
        pw *= std::abs(x1);
    }
    return std::abs(acc) < kLeadingCoeffCutoff * mag;
}

}  // namespace detail

// Monte-Carlo check of the d-tuple property: n_samples accepted start points,
// drawn uniformly from the disk of radius 3 (deterministic for a fixed
// seed), each probed with d_tuple_witness. Non-generic samples (vanishing
// leading coefficient, ambiguous root clusters) are redrawn; exceeding a 90%
// rejection rate raises TooManyDegenerateSamples. Fails fast on the first
// false witness; otherwise reports the worst accepted witness.
inline OracleVerdict verify_map_of_tuples(const Correspondence& f, int n_samples = 100,
                                          double tol = 1e-6, std::uint64_t seed = 0) {
    std::mt19937_64 rng(seed);
    OracleVerdict v;
    const long max_attempts = 10L * std::max(1, n_samples);
    long attempts = 0;
    while (v.samples_used < n_samples && attempts < max_attempts) {
        ++attempts;
        const std::complex<double> x1 = detail::sample_disk(rng);
        if (detail::leading_coeff_degenerate(f, x1)) {
            ++v.samples_rejected;
            continue;
        }
        TupleWitness w;
        try {
            w = d_tuple_witness(f, SpherePoint::finite(x1), tol);
        } catch (const DomainError& e) {
            if (e.code() == Errc::DegenerateSample) {
                ++v.samples_rejected;
                continue;
            }
            throw;
        }
        ++v.samples_used;
        if (!v.worst || w.max_mismatch > v.worst->max_mismatch) v.worst = w;
        if (!w.verdict) {
            v.worst = std::move(w);
            v.pass = false;
            return v;
        }
    }
    if (v.samples_used < n_samples)
        throw DomainError(Errc::TooManyDegenerateSamples,
                          "more than 90% of samples were non-generic");
    v.pass = true;
    return v;
}

// Numeric check that a factorization matches its correspondence: at sampled
// x1, the fiber of f must coincide (as a d-point multiset on the sphere)
// with the degree-d solution set of psi(y) = phi(x1), computed from the
// homogeneous form den_phi(x1)*num_psi(y) - num_phi(x1)*den_psi(y) with
// infinity filling. A factorization of the wrong degree can never verify.
inline bool verify_factorization(const Correspondence& f, const Factorization& fact,
                                 int n_samples = 100, double tol = 1e-6,
                                 std::uint64_t seed = 0) {
    const int d = f.d();
    if (fact.phi.degree() != d || fact.psi.degree() != d) return false;
    std::mt19937_64 rng(seed);
    const double r = cluster_radius(tol);
    const long max_attempts = 10L * std::max(1, n_samples);
    long attempts = 0;
    int used = 0;
    while (used < n_samples && attempts < max_attempts) {
        ++attempts;
        const std::complex<double> x1 = detail::sample_disk(rng);
        if (detail::leading_coeff_degenerate(f, x1)) continue;

        const auto [pn, pd] = fact.phi.eval_pair(x1);
        const double ax = std::abs(x1);
        const double spn = detail::eval_magnitude(fact.phi.num().to_complex_coeffs(), ax);
        const double spd = detail::eval_magnitude(fact.phi.den().to_complex_coeffs(), ax);
        if (std::abs(pn) < kLeadingCoeffCutoff * spn && std::abs(pd) < kLeadingCoeffCutoff * spd)
            continue;  // phi numerically indeterminate here

        std::vector<std::complex<double>> c(static_cast<std::size_t>(d) + 1);
        double scale = 0.0, cmax = 0.0;
        for (int j = 0; j <= d; ++j) {
            const std::complex<double> mu = fact.psi.num().coeff(j).to_complex();
            const std::complex<double> nu = fact.psi.den().coeff(j).to_complex();
            c[static_cast<std::size_t>(j)] = pd * mu - pn * nu;
            scale = std::max(scale, std::abs(pd) * std::abs(mu) + std::abs(pn) * std::abs(nu));
            cmax = std::max(cmax, std::abs(c[static_cast<std::size_t>(j)]));
        }
        if (cmax <= kCoeffDeadband * scale || scale == 0.0) continue;

        std::vector<SpherePoint> expected = poly_roots(c, d, scale);
        const detail::EvaluatedPoly ec{c, scale};
        if (!detail::collapse_clusters(expected, r, detail::inclusion_radii(ec, expected))) continue;
        detail::EvaluatedPoly ef;
        Fiber fib = detail::fiber_roots(f, SpherePoint::finite(x1), false, ef);
        if (!detail::collapse_clusters(fib.points, r, detail::inclusion_radii(ef, fib.points))) continue;
        ++used;
        if (!multiset_match(fib, Fiber{std::move(expected)}, tol).matched) return false;
    }
    if (used < n_samples)
        throw DomainError(Errc::TooManyDegenerateSamples,
                          "more than 90% of samples were non-generic");
    return true;
}

}  // namespace dtuples
