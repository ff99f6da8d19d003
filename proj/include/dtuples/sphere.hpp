#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

namespace dtuples {

// Point on the Riemann sphere: a finite complex number or the point at
// infinity.
struct SpherePoint {
    std::complex<double> z{0.0, 0.0};
    bool infinite = false;

    static SpherePoint finite(std::complex<double> v) { return {v, false}; }
    static SpherePoint infinity() { return {{0.0, 0.0}, true}; }

    friend bool operator==(const SpherePoint& a, const SpherePoint& b) {
        if (a.infinite || b.infinite) return a.infinite == b.infinite;
        return a.z == b.z;
    }
};

// 2|p-q| / sqrt((1+|p|^2)(1+|q|^2)); the limit 2/sqrt(1+|p|^2) against the
// point at infinity, and 0 for two infinite points.
inline double chordal_distance(const SpherePoint& a, const SpherePoint& b) {
    if (a.infinite && b.infinite) return 0.0;
    if (a.infinite) return 2.0 / std::hypot(1.0, std::abs(b.z));
    if (b.infinite) return 2.0 / std::hypot(1.0, std::abs(a.z));
    return 2.0 * std::abs(a.z - b.z) / (std::hypot(1.0, std::abs(a.z)) * std::hypot(1.0, std::abs(b.z)));
}

// Deterministic presentation order: finite points by (modulus, argument in
// [0, 2pi)), the point at infinity last; the sort is stable so exact ties
// keep their incoming order.
inline std::vector<SpherePoint> canonical_order(std::vector<SpherePoint> pts) {
    auto key_arg = [](const std::complex<double>& z) {
        double a = std::arg(z);
        if (a < 0) a += 2.0 * M_PI;
        return a;
    };
    std::stable_sort(pts.begin(), pts.end(), [&](const SpherePoint& a, const SpherePoint& b) {
        if (a.infinite != b.infinite) return b.infinite;
        if (a.infinite) return false;
        const double ma = std::abs(a.z), mb = std::abs(b.z);
        if (ma != mb) return ma < mb;
        return key_arg(a.z) < key_arg(b.z);
    });
    return pts;
}

}  // namespace dtuples
