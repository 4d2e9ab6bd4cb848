#pragma once

#include "potts/simplex.hpp"

namespace potts {

/// Symmetric 2x2 matrix [[a, b], [b, c]].
struct Sym2 {
    double a = 0.0, b = 0.0, c = 0.0;

    double det() const { return a * c - b * b; }
    /// Eigenvalues in ascending order.
    Vec2 eigenvalues() const;
};

/// f(nu) = -(beta/2) <nu,nu> + sum_i nu_i log(nu_i / alpha_i).
double free_energy(const ModelParams& params, const SpinDistribution& nu);

/// Derivative of the free energy in the local chart (nu1, nu2), nu3 = 1 - nu1 - nu2.
Vec2 gradient_local(const ModelParams& params, const SpinDistribution& nu);

/// Second derivative in the same chart. Independent of alpha.
Sym2 hessian_local(double beta, const SpinDistribution& nu);
inline Sym2 hessian_local(const ModelParams& params, const SpinDistribution& nu) {
    return hessian_local(params.beta, nu);
}

/// 3 nu1 nu2 nu3 beta^2 - 2 (nu1 nu2 + nu2 nu3 + nu3 nu1) beta + 1.
/// Equals nu1 nu2 nu3 det(hessian_local); vanishes exactly on degenerate points.
double degeneracy_lhs(double beta, const SpinDistribution& nu);

/// The field alpha for which nu is a stationary point of f_{beta,alpha}:
/// alpha_i proportional to nu_i exp(-beta nu_i).
AprioriMeasure catastrophe_map(double beta, const SpinDistribution& nu);

/// (u, v) coordinates of catastrophe_map(beta, nu), computed without
/// normalizing: u = log(nu1/nu3) - beta (nu1 - nu3), likewise v.
CoordUV catastrophe_map_uv(double beta, const SpinDistribution& nu);

/// Free energy at nu under the field catastrophe_map(beta, nu); needs no alpha.
double stationary_value(double beta, const SpinDistribution& nu);

/// Gradient of stationary_value in the local chart (nu1, nu2).
Vec2 stationary_value_gradient(double beta, const SpinDistribution& nu);

} // namespace potts
