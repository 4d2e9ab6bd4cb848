#include "potts/model.hpp"

#include <cmath>

namespace potts {

Vec2 Sym2::eigenvalues() const {
    const double mean = 0.5 * (a + c);
    const double radius = std::hypot(0.5 * (a - c), b);
    // The smaller root via det / larger avoids cancellation when both are close to zero.
    const double large = mean >= 0.0 ? mean + radius : mean - radius;
    const double small = large != 0.0 ? det() / large : 0.0;
    return large >= small ? Vec2{small, large} : Vec2{large, small};
}

double free_energy(const ModelParams& params, const SpinDistribution& nu) {
    double quad = 0.0, entropy = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        quad += nu[i] * nu[i];
        entropy += nu[i] * std::log(nu[i] / params.alpha[i]);
    }
    return -0.5 * params.beta * quad + entropy;
}

Vec2 gradient_local(const ModelParams& params, const SpinDistribution& nu) {
    const double beta = params.beta;
    const auto& a = params.alpha;
    const double last = -beta * nu[2] + std::log(nu[2] / a[2]);
    return {(-beta * nu[0] + std::log(nu[0] / a[0])) - last,
            (-beta * nu[1] + std::log(nu[1] / a[1])) - last};
}

Sym2 hessian_local(double beta, const SpinDistribution& nu) {
    const double i3 = 1.0 / nu[2];
    return {1.0 / nu[0] + i3 - 2.0 * beta, i3 - beta, 1.0 / nu[1] + i3 - 2.0 * beta};
}

double degeneracy_lhs(double beta, const SpinDistribution& nu) {
    const double prod = nu[0] * nu[1] * nu[2];
    const double pairs = nu[0] * nu[1] + nu[1] * nu[2] + nu[2] * nu[0];
    return 3.0 * prod * beta * beta - 2.0 * pairs * beta + 1.0;
}

AprioriMeasure catastrophe_map(double beta, const SpinDistribution& nu) {
    // exponents shifted by the smallest nu so the largest weight factor is 1
    const double m = std::min({nu[0], nu[1], nu[2]});
    return AprioriMeasure::from_weights(nu[0] * std::exp(-beta * (nu[0] - m)),
                                        nu[1] * std::exp(-beta * (nu[1] - m)),
                                        nu[2] * std::exp(-beta * (nu[2] - m)));
}

CoordUV catastrophe_map_uv(double beta, const SpinDistribution& nu) {
    return {std::log(nu[0] / nu[2]) - beta * (nu[0] - nu[2]),
            std::log(nu[1] / nu[2]) - beta * (nu[1] - nu[2])};
}

double stationary_value(double beta, const SpinDistribution& nu) {
    double partition = 0.0, quad = 0.0;
    for (std::size_t j = 0; j < 3; ++j) {
        partition += nu[j] * std::exp(-beta * nu[j]);
        quad += nu[j] * nu[j];
    }
    // sum_i nu_i = 1 collapses the second term to a single log
    return 0.5 * beta * quad + std::log(partition);
}

Vec2 stationary_value_gradient(double beta, const SpinDistribution& nu) {
    double partition = 0.0;
    std::array<double, 3> d{};
    for (std::size_t j = 0; j < 3; ++j) {
        const double e = std::exp(-beta * nu[j]);
        partition += nu[j] * e;
        d[j] = e * (1.0 - beta * nu[j]);
    }
    return {beta * (nu[0] - nu[2]) + (d[0] - d[2]) / partition,
            beta * (nu[1] - nu[2]) + (d[1] - d[2]) / partition};
}

} // namespace potts
