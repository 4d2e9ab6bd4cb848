#pragma once

#include <string_view>
#include <vector>

#include "potts/kernels.hpp"
#include "potts/model.hpp"

namespace potts {

enum class StationaryKind { Minimum, Saddle, Maximum, Degenerate };

std::string_view to_string(StationaryKind kind);

struct StationaryPoint {
    SpinDistribution nu;
    Vec2 hess_eigenvalues;   // ascending
    StationaryKind kind;
    double value;            // free energy at nu
};

/// Classifies a point by the signs of the local Hessian eigenvalues.
StationaryPoint classify(const ModelParams& params, const SpinDistribution& nu, const ToleranceConfig& tol = {});

enum class Execution { Serial, Parallel };

/// All stationary points reachable by damped Newton from a barycentric seed
/// lattice of the given density (>= 8). Roots are sorted lexicographically in
/// (x, y) and merged within tol.merge_radius, so the result does not depend
/// on scheduling. Throws NumericalError if no seed converges.
std::vector<StationaryPoint> find_stationary_points(const ModelParams& params, int grid_density,
                                                    const ToleranceConfig& tol = {},
                                                    Execution exec = Execution::Parallel);

struct MinimaCensus {
    ModelParams params;
    std::vector<StationaryPoint> points;
    int n_local_minima = 0;
    std::vector<StationaryPoint> global_minimizers;
    /// Set when a Degenerate point was found: the parameters lie on the
    /// bifurcation set and the count is what was observed, not a generic cell value.
    bool degenerate = false;
};

inline constexpr int kDefaultSeedGrid = 64;

MinimaCensus census(const ModelParams& params, const ToleranceConfig& tol = {}, int grid_density = kDefaultSeedGrid);

/// Test oracle: least free energy over a dense lattice (density >= 100),
/// refined by one Newton run when that run stays a local minimum.
SpinDistribution brute_force_global_min(const ModelParams& params, int grid_density,
                                        Execution exec = Execution::Parallel);

/// Newton polish from a starting guess; nullopt when it does not converge.
std::optional<SpinDistribution> refine_stationary(const ModelParams& params, const SpinDistribution& start,
                                                  const ToleranceConfig& tol = {});

} // namespace potts
