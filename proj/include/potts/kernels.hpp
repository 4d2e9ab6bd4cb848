#pragma once

// Data-parallel inner loops. Every kernel has a serial reference version
// and an OpenMP version; both return identical results for identical input.

#include <optional>
#include <span>
#include <vector>

#include "potts/model.hpp"

namespace potts::kernels {

struct NewtonOptions {
    int max_iterations = 200;
    int max_halvings = 40;
    int polish_iterations = 60;   // extra steps after the residual is met
    double residual = 1e-10;
    double margin = 1e-9;
};

/// Damped Newton iteration on gradient_local starting from a local point.
/// Each step is halved until the gradient norm decreases and the trial point
/// stays `margin` inside the simplex. After the residual is reached, steps
/// continue while the gradient keeps decreasing, which pins down slowly
/// converging degenerate roots. Returns nullopt if the residual is not met.
std::optional<Vec2> newton_stationary(const ModelParams& params, Vec2 start, const NewtonOptions& opts);

/// Barycentric lattice of the given density mapped into the simplex with the
/// given corner margin; (density+1)(density+2)/2 points in local coordinates.
std::vector<Vec2> barycentric_lattice(int density, double margin);

std::vector<std::optional<Vec2>> newton_from_seeds_serial(const ModelParams& params, std::span<const Vec2> seeds,
                                                          const NewtonOptions& opts);
std::vector<std::optional<Vec2>> newton_from_seeds_omp(const ModelParams& params, std::span<const Vec2> seeds,
                                                       const NewtonOptions& opts);

struct GridMinimum {
    std::size_t index = 0;
    double value = 0.0;
};

/// Lowest free-energy value over a point set; ties go to the lowest index.
GridMinimum grid_argmin_serial(const ModelParams& params, std::span<const Vec2> points);
GridMinimum grid_argmin_omp(const ModelParams& params, std::span<const Vec2> points);

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();

} // namespace potts::kernels
