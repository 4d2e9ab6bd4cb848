#pragma once

// Shared helpers for the test executables: random simplex points and
// finite-difference oracles written independently of the library.

#include <array>
#include <cmath>
#include <random>

#include "potts/model.hpp"

namespace testutil {

// Uniform on the simplex (sorted-uniform spacings), all components >= margin.
template <typename Rng> potts::SpinDistribution random_spin(Rng& rng, double margin) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (;;) {
        double a = u(rng), b = u(rng);
        if (a > b) std::swap(a, b);
        const double c1 = a, c2 = b - a, c3 = 1.0 - b;
        if (c1 >= margin && c2 >= margin && c3 >= margin) return potts::SpinDistribution(c1, c2, 1.0 - c1 - c2);
    }
}

// Field with log-weights uniform in [-2, 2].
template <typename Rng> potts::AprioriMeasure random_field(Rng& rng) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    return potts::AprioriMeasure::from_weights(std::exp(u(rng)), std::exp(u(rng)), std::exp(u(rng)));
}

inline double f_local(const potts::ModelParams& p, double n1, double n2) {
    return potts::free_energy(p, potts::SpinDistribution::from_local(n1, n2));
}

inline potts::Vec2 fd_gradient(const potts::ModelParams& p, const potts::SpinDistribution& nu, double h) {
    const double a = nu[0], b = nu[1];
    return {(f_local(p, a + h, b) - f_local(p, a - h, b)) / (2 * h),
            (f_local(p, a, b + h) - f_local(p, a, b - h)) / (2 * h)};
}

// Row-major [d1g1, d2g1, d1g2, d2g2] from central differences of the gradient.
inline std::array<double, 4> fd_hessian(const potts::ModelParams& p, const potts::SpinDistribution& nu, double h) {
    auto g = [&](double d1, double d2) {
        return potts::gradient_local(p, potts::SpinDistribution::from_local(nu[0] + d1, nu[1] + d2));
    };
    const auto g1p = g(h, 0), g1m = g(-h, 0), g2p = g(0, h), g2m = g(0, -h);
    return {(g1p[0] - g1m[0]) / (2 * h), (g2p[0] - g2m[0]) / (2 * h), (g1p[1] - g1m[1]) / (2 * h),
            (g2p[1] - g2m[1]) / (2 * h)};
}

inline double local_distance(const potts::SpinDistribution& a, const potts::SpinDistribution& b) {
    const auto xa = potts::to_xy(a), xb = potts::to_xy(b);
    return std::hypot(xa.x - xb.x, xa.y - xb.y);
}

} // namespace testutil
