#include "potts/stationary.hpp"

#include <algorithm>
#include <cmath>

namespace potts {

namespace {

kernels::NewtonOptions newton_options(const ToleranceConfig& tol) {
    kernels::NewtonOptions o;
    o.residual = tol.residual;
    o.margin = tol.iterate_margin;
    return o;
}

constexpr double kSeedCornerMargin = 1e-3;

} // namespace

std::string_view to_string(StationaryKind kind) {
    switch (kind) {
        case StationaryKind::Minimum: return "minimum";
        case StationaryKind::Saddle: return "saddle";
        case StationaryKind::Maximum: return "maximum";
        case StationaryKind::Degenerate: return "degenerate";
    }
    return "unknown";
}

StationaryPoint classify(const ModelParams& params, const SpinDistribution& nu, const ToleranceConfig& tol) {
    const Vec2 ev = hessian_local(params.beta, nu).eigenvalues();
    StationaryKind kind;
    if (std::min(std::abs(ev[0]), std::abs(ev[1])) <= tol.degeneracy) {
        kind = StationaryKind::Degenerate;
    } else if (ev[0] > 0.0) {
        kind = StationaryKind::Minimum;
    } else if (ev[1] < 0.0) {
        kind = StationaryKind::Maximum;
    } else {
        kind = StationaryKind::Saddle;
    }
    return {nu, ev, kind, free_energy(params, nu)};
}

std::vector<StationaryPoint> find_stationary_points(const ModelParams& params, int grid_density,
                                                    const ToleranceConfig& tol, Execution exec) {
    if (grid_density < 8) throw DomainError("find_stationary_points: grid density must be at least 8");

    const auto seeds = kernels::barycentric_lattice(grid_density, kSeedCornerMargin);
    const auto opts = newton_options(tol);
    const auto roots = exec == Execution::Parallel ? kernels::newton_from_seeds_omp(params, seeds, opts)
                                                   : kernels::newton_from_seeds_serial(params, seeds, opts);

    struct Root {
        CoordXY xy;
        SpinDistribution nu;
    };
    std::vector<Root> converged;
    for (const auto& r : roots) {
        if (!r) continue;
        const auto nu = SpinDistribution::from_local((*r)[0], (*r)[1]);
        converged.push_back({to_xy(nu), nu});
    }
    if (converged.empty()) throw NumericalError("find_stationary_points: no seed converged");

    std::sort(converged.begin(), converged.end(), [](const Root& a, const Root& b) {
        return a.xy.x < b.xy.x || (a.xy.x == b.xy.x && a.xy.y < b.xy.y);
    });

    std::vector<Root> unique;
    for (const auto& c : converged) {
        const bool dup = std::any_of(unique.begin(), unique.end(), [&](const Root& u) {
            return std::hypot(u.xy.x - c.xy.x, u.xy.y - c.xy.y) <= tol.merge_radius;
        });
        if (!dup) unique.push_back(c);
    }

    std::vector<StationaryPoint> out;
    out.reserve(unique.size());
    for (const auto& c : unique) out.push_back(classify(params, c.nu, tol));
    return out;
}

MinimaCensus census(const ModelParams& params, const ToleranceConfig& tol, int grid_density) {
    MinimaCensus c{params, find_stationary_points(params, grid_density, tol), 0, {}, false};
    double best = INFINITY;
    for (const auto& p : c.points) {
        if (p.kind == StationaryKind::Degenerate) c.degenerate = true;
        if (p.kind != StationaryKind::Minimum) continue;
        ++c.n_local_minima;
        best = std::min(best, p.value);
    }
    for (const auto& p : c.points) {
        if (p.kind == StationaryKind::Minimum && p.value <= best + tol.depth) c.global_minimizers.push_back(p);
    }
    return c;
}

std::optional<SpinDistribution> refine_stationary(const ModelParams& params, const SpinDistribution& start,
                                                  const ToleranceConfig& tol) {
    const auto r = kernels::newton_stationary(params, start.local(), newton_options(tol));
    if (!r) return std::nullopt;
    return SpinDistribution::from_local((*r)[0], (*r)[1]);
}

SpinDistribution brute_force_global_min(const ModelParams& params, int grid_density, Execution exec) {
    if (grid_density < 100) throw DomainError("brute_force_global_min: grid density must be at least 100");
    const auto grid = kernels::barycentric_lattice(grid_density, kSeedCornerMargin);
    const auto best = exec == Execution::Parallel ? kernels::grid_argmin_omp(params, grid)
                                                  : kernels::grid_argmin_serial(params, grid);
    const auto start = SpinDistribution::from_local(grid[best.index][0], grid[best.index][1]);
    const auto refined = refine_stationary(params, start);
    if (refined && classify(params, *refined).kind == StationaryKind::Minimum &&
        free_energy(params, *refined) <= best.value) {
        return *refined;
    }
    return start;
}

} // namespace potts
