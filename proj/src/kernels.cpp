#include "potts/kernels.hpp"

#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace potts::kernels {

namespace {

bool inside(const Vec2& p, double margin) {
    return p[0] >= margin && p[1] >= margin && 1.0 - p[0] - p[1] >= margin;
}

double norm(const Vec2& g) { return std::hypot(g[0], g[1]); }

Vec2 gradient_at(const ModelParams& params, const Vec2& p) {
    return gradient_local(params, SpinDistribution::from_local(p[0], p[1]));
}

} // namespace

std::optional<Vec2> newton_stationary(const ModelParams& params, Vec2 start, const NewtonOptions& opts) {
    if (!inside(start, opts.margin)) return std::nullopt;
    Vec2 p = start;
    Vec2 g = gradient_at(params, p);
    double gn = norm(g);
    int polish = -1;

    for (int it = 0; it < opts.max_iterations; ++it) {
        if (gn <= opts.residual && polish < 0) polish = 0;
        if (polish >= 0 && ++polish > opts.polish_iterations) break;

        const Sym2 h = hessian_local(params.beta, SpinDistribution::from_local(p[0], p[1]));
        const double det = h.det();
        if (!(std::abs(det) > 0.0) || !std::isfinite(det)) break;
        const Vec2 step{(-g[0] * h.c + g[1] * h.b) / det, (g[0] * h.b - h.a * g[1]) / det};

        double t = 1.0;
        bool accepted = false;
        for (int k = 0; k <= opts.max_halvings; ++k, t *= 0.5) {
            const Vec2 trial{p[0] + t * step[0], p[1] + t * step[1]};
            if (!inside(trial, opts.margin)) continue;
            const Vec2 gt = gradient_at(params, trial);
            const double gtn = norm(gt);
            if (gtn < gn) {
                p = trial;
                g = gt;
                gn = gtn;
                accepted = true;
                break;
            }
        }
        if (!accepted) break;
    }
    if (gn <= opts.residual) return p;
    return std::nullopt;
}

std::vector<Vec2> barycentric_lattice(int density, double margin) {
    std::vector<Vec2> out;
    out.reserve(static_cast<std::size_t>((density + 1) * (density + 2) / 2));
    const double scale = 1.0 - 3.0 * margin;
    for (int i = 0; i <= density; ++i) {
        for (int j = 0; j <= density - i; ++j) {
            out.push_back({margin + scale * i / density, margin + scale * j / density});
        }
    }
    return out;
}

std::vector<std::optional<Vec2>> newton_from_seeds_serial(const ModelParams& params, std::span<const Vec2> seeds,
                                                          const NewtonOptions& opts) {
    std::vector<std::optional<Vec2>> out(seeds.size());
    for (std::size_t i = 0; i < seeds.size(); ++i) out[i] = newton_stationary(params, seeds[i], opts);
    return out;
}

std::vector<std::optional<Vec2>> newton_from_seeds_omp(const ModelParams& params, std::span<const Vec2> seeds,
                                                       const NewtonOptions& opts) {
    std::vector<std::optional<Vec2>> out(seeds.size());
    const auto n = static_cast<std::ptrdiff_t>(seeds.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = newton_stationary(params, seeds[i], opts);
    return out;
}

GridMinimum grid_argmin_serial(const ModelParams& params, std::span<const Vec2> points) {
    GridMinimum best{0, std::numeric_limits<double>::infinity()};
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double v = free_energy(params, SpinDistribution::from_local(points[i][0], points[i][1]));
        if (v < best.value) best = {i, v};
    }
    return best;
}

GridMinimum grid_argmin_omp(const ModelParams& params, std::span<const Vec2> points) {
    GridMinimum best{0, std::numeric_limits<double>::infinity()};
    const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel
    {
        GridMinimum local{0, std::numeric_limits<double>::infinity()};
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const double v = free_energy(params, SpinDistribution::from_local(points[i][0], points[i][1]));
            if (v < local.value) local = {static_cast<std::size_t>(i), v};
        }
#pragma omp critical
        {
            if (local.value < best.value || (local.value == best.value && local.index < best.index)) best = local;
        }
    }
    return best;
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace potts::kernels
