#include "potts/bifurcation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace potts {

namespace {

constexpr double kEightThirds = 8.0 / 3.0;

bool near(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

double sqrt_clamped(double v) { return std::sqrt(std::max(0.0, v)); }

// 1/2 -+ sqrt(1 - 2/beta)/2
double outer_lo(double beta) { return 0.5 - 0.5 * sqrt_clamped(1.0 - 2.0 / beta); }
double outer_hi(double beta) { return 0.5 + 0.5 * sqrt_clamped(1.0 - 2.0 / beta); }
// 1/2 -+ sqrt(1 - 8/(3 beta))/2
double inner_lo(double beta) { return 0.5 - 0.5 * sqrt_clamped(1.0 - 8.0 / (3.0 * beta)); }
double inner_hi(double beta) { return 0.5 + 0.5 * sqrt_clamped(1.0 - 8.0 / (3.0 * beta)); }

bool is_pole(double beta, double x) { return std::abs(3.0 * beta * x - 2.0) <= 1e-14; }

} // namespace

bool DomainIntervals::contains(double x) const {
    return std::any_of(intervals.begin(), intervals.end(), [x](const Interval& iv) { return iv.contains(x); });
}

DomainIntervals domain_intervals(double beta) {
    DomainIntervals d{beta, {}};
    if (!(beta > 2.0)) return d;
    const double fold = 1.0 - 2.0 / beta;
    std::vector<Interval> raw;
    if (beta < kEightThirds) {
        raw = {{0.0, fold, false, true}, {outer_lo(beta), outer_hi(beta), false, false}};
    } else if (beta < 3.0) {
        raw = {{0.0, outer_lo(beta), false, false},
               {fold, inner_lo(beta), false, false},
               {inner_hi(beta), outer_hi(beta), false, false}};
    } else {
        raw = {{0.0, outer_lo(beta), false, false},
               {inner_lo(beta), fold, false, false},
               {inner_hi(beta), outer_hi(beta), false, false}};
    }
    for (const auto& iv : raw) {
        // endpoints that coincide in exact arithmetic (beta = 3) may differ by an ulp
        if (!iv.empty() && iv.hi - iv.lo > 1e-14) d.intervals.push_back(iv);
    }
    return d;
}

std::vector<double> discriminant_roots(double beta) {
    std::vector<double> r{2.0 / (3.0 * beta), 1.0 - 2.0 / beta};
    if (beta >= kEightThirds) {
        r.push_back(inner_lo(beta));
        r.push_back(inner_hi(beta));
    }
    std::sort(r.begin(), r.end());
    return r;
}

std::vector<double> simplex_constraint_endpoints(double beta) {
    std::vector<double> r{outer_lo(beta), outer_hi(beta), 2.0 / (3.0 * beta)};
    std::sort(r.begin(), r.end());
    return r;
}

std::optional<double> gamma_pole_limit(double beta) {
    if (near(beta, kEightThirds)) return 0.25;
    return std::nullopt;
}

double gamma(double beta, double x) {
    if (is_pole(beta, x)) {
        if (auto lim = gamma_pole_limit(beta)) {
            throw DomainError("gamma: removable singularity at x = 2/(3 beta); the limit there is " +
                              std::to_string(*lim));
        }
        throw DomainError("gamma: pole at x = 2/(3 beta)");
    }
    if (!domain_intervals(beta).contains(x)) throw DomainError("gamma: x outside the domain D_beta");
    const double n = 1.0 - 2.0 * beta * x * (1.0 - x);
    const double c = n / (beta * (2.0 - 3.0 * beta * x));
    const double s = 1.0 - x;
    // small root as c / large root: no cancellation when c is small
    const double large = 0.5 * (s + sqrt_clamped(s * s - 4.0 * c));
    return c / large;
}

double degeneracy_quadratic(double beta, double nu1, double nu2) {
    const double nu3 = 1.0 - nu1 - nu2;
    return 3.0 * nu1 * nu2 * nu3 * beta * beta - 2.0 * (nu1 * nu2 + nu2 * nu3 + nu3 * nu1) * beta + 1.0;
}

double degenerate_locus_xy(double beta, double x, double y) {
    return (6.0 * beta * (x * x + y * y - 1.0) + beta * beta * (2.0 * y + 1.0) * ((y - 1.0) * (y - 1.0) - 3.0 * x * x) +
            9.0) /
           9.0;
}

namespace {

std::optional<SliceSample> slice_sample(double beta, double x, double nu2) {
    const double nu3 = 1.0 - x - nu2;
    if (!(nu2 > 1e-12 && nu3 > 1e-12)) return std::nullopt;
    try {
        SpinDistribution nu(x, nu2, nu3);
        return SliceSample{x, nu, catastrophe_map(beta, nu)};
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

// Parameter values clustered quadratically towards both ends of [lo, hi];
// endpoints are included only when closed.
std::vector<double> clustered(const Interval& iv, int n) {
    std::vector<double> xs;
    for (int k = 0; k <= n + 1; ++k) {
        if (k == 0 && !iv.lo_closed) continue;
        if (k == n + 1 && !iv.hi_closed) continue;
        const double t = static_cast<double>(k) / (n + 1);
        const double x = iv.lo + (iv.hi - iv.lo) * 0.5 * (1.0 - std::cos(std::numbers::pi * t));
        xs.push_back(k == 0 ? iv.lo : (k == n + 1 ? iv.hi : x));
    }
    return xs;
}

} // namespace

std::vector<SliceCurve> slice(double beta, int samples_per_interval) {
    if (samples_per_interval < 2) throw DomainError("slice: need at least two samples per interval");
    const DomainIntervals dom = domain_intervals(beta);
    std::vector<SliceCurve> base;
    const double pole = 2.0 / (3.0 * beta);
    const auto limit = gamma_pole_limit(beta);
    for (std::size_t k = 0; k < dom.intervals.size(); ++k) {
        const Interval& iv = dom.intervals[k];
        SliceCurve c{beta, Permutation{}, static_cast<int>(k), {}};
        const bool limit_lo = limit && near(iv.lo, pole);
        const bool limit_hi = limit && near(iv.hi, pole);
        if (limit_lo) {
            if (auto s = slice_sample(beta, iv.lo, *limit)) c.samples.push_back(*s);
        }
        for (double x : clustered(iv, samples_per_interval)) {
            if (is_pole(beta, x) || !iv.contains(x)) continue;
            if (auto s = slice_sample(beta, x, gamma(beta, x))) c.samples.push_back(*s);
        }
        if (limit_hi) {
            if (auto s = slice_sample(beta, iv.hi, *limit)) c.samples.push_back(*s);
        }
        base.push_back(std::move(c));
    }
    std::vector<SliceCurve> out;
    for (const Permutation& p : Permutation::all()) {
        for (const SliceCurve& c : base) {
            SliceCurve img{beta, p, c.interval, {}};
            img.samples.reserve(c.samples.size());
            for (const SliceSample& s : c.samples) {
                img.samples.push_back({s.x_param, apply_permutation(p, s.nu), apply_permutation(p, s.alpha)});
            }
            out.push_back(std::move(img));
        }
    }
    return out;
}

double surface_beta(const SpinDistribution& nu, int sign) {
    const double s = 1.0 / nu[0] + 1.0 / nu[1] + 1.0 / nu[2];
    const double p = 1.0 / (nu[0] * nu[1]) + 1.0 / (nu[1] * nu[2]) + 1.0 / (nu[2] * nu[0]);
    const double plus = s / 3.0 + sqrt_clamped(s * s / 9.0 - p / 3.0);
    // the product of the two roots is p/3
    return sign > 0 ? plus : (p / 3.0) / plus;
}

namespace {

std::optional<SurfaceSample> surface_sample(int n, int i, int j, int sign) {
    const int k = n - i - j;
    try {
        SpinDistribution nu(static_cast<double>(i) / n, static_cast<double>(j) / n, static_cast<double>(k) / n);
        const double beta = surface_beta(nu, sign);
        if (!std::isfinite(beta)) return std::nullopt;
        return SurfaceSample{nu, beta, catastrophe_map(beta, nu), i, j};
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

struct LatticeIndex {
    int i, j;
};

std::vector<LatticeIndex> interior_lattice(int n) {
    std::vector<LatticeIndex> idx;
    for (int i = 1; i < n; ++i) {
        for (int j = 1; i + j < n; ++j) idx.push_back({i, j});
    }
    return idx;
}

SurfacePatch collect(int n, int sign, const std::vector<std::optional<SurfaceSample>>& raw) {
    SurfacePatch patch{sign, n, {}, 0};
    for (const auto& s : raw) {
        if (s) {
            patch.samples.push_back(*s);
        } else {
            ++patch.skipped;
        }
    }
    return patch;
}

void check_density(int n) {
    if (n < 16) throw DomainError("surface_patches: grid density must be at least 16");
}

} // namespace

std::pair<SurfacePatch, SurfacePatch> surface_patches_serial(int grid_density) {
    check_density(grid_density);
    const auto idx = interior_lattice(grid_density);
    std::vector<std::optional<SurfaceSample>> plus(idx.size()), minus(idx.size());
    for (std::size_t m = 0; m < idx.size(); ++m) {
        plus[m] = surface_sample(grid_density, idx[m].i, idx[m].j, +1);
        minus[m] = surface_sample(grid_density, idx[m].i, idx[m].j, -1);
    }
    return {collect(grid_density, +1, plus), collect(grid_density, -1, minus)};
}

std::pair<SurfacePatch, SurfacePatch> surface_patches(int grid_density) {
    check_density(grid_density);
    const auto idx = interior_lattice(grid_density);
    std::vector<std::optional<SurfaceSample>> plus(idx.size()), minus(idx.size());
    const long long count = static_cast<long long>(idx.size());
#pragma omp parallel for schedule(static)
    for (long long m = 0; m < count; ++m) {
        plus[m] = surface_sample(grid_density, idx[m].i, idx[m].j, +1);
        minus[m] = surface_sample(grid_density, idx[m].i, idx[m].j, -1);
    }
    return {collect(grid_density, +1, plus), collect(grid_density, -1, minus)};
}

namespace {

// Point of the degenerate branch through (0, y0) at abscissa x, in (u, v).
CoordUV branch_uv(double beta, double x, double& y) {
    for (int it = 0; it < 60; ++it) {
        const double f = degenerate_locus_xy(beta, x, y);
        const double fy = (12.0 * beta * y + 2.0 * beta * beta * ((y - 1.0) * (y - 1.0) - 3.0 * x * x) +
                           2.0 * beta * beta * (2.0 * y + 1.0) * (y - 1.0)) /
                          9.0;
        const double dy = f / fy;
        y -= dy;
        if (std::abs(dy) <= 1e-17) break;
    }
    return catastrophe_map_uv(beta, from_xy<SpinDistribution>({x, y}));
}

// Two-level Richardson extrapolation of values with error series in powers
// of t = h^2, sampled at h, h/2, h/4.
double richardson(double r0, double r1, double r2) {
    const double a0 = (4.0 * r1 - r0) / 3.0;
    const double a1 = (4.0 * r2 - r1) / 3.0;
    return (16.0 * a1 - a0) / 15.0;
}

} // namespace

ButterflyCoefficients butterfly_expansion(double beta, double step) {
    if (!(beta > 2.0 && beta < kEightThirds)) {
        throw DomainError("butterfly_expansion: requires 2 < beta < 8/3");
    }
    if (!(step > 0.0 && step < 0.1)) throw DomainError("butterfly_expansion: step must lie in (0, 0.1)");
    // cubic on the symmetry axis x = 0
    const auto cubic = [beta](double y) {
        return 2.0 * beta * beta * y * y * y + 3.0 * beta * (2.0 - beta) * y * y + (beta - 3.0) * (beta - 3.0);
    };
    double lo = -0.5, hi = 0.0;
    if (!(cubic(lo) < 0.0 && cubic(hi) > 0.0)) {
        lo = -1.0;
        if (!(cubic(lo) < 0.0 && cubic(hi) > 0.0)) throw DomainError("butterfly_expansion: cannot bracket y0");
    }
    while (hi - lo > 1e-15) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (cubic(mid) < 0.0 ? lo : hi) = mid;
    }
    const double y0 = 0.5 * (lo + hi);

    double y = y0;
    const CoordUV base = branch_uv(beta, 0.0, y);
    double sym[4], anti[4], t[4];
    for (int k = 0; k < 4; ++k) {
        const double h = step / double(1 << k);
        double yk = y0;
        const CoordUV w = branch_uv(beta, h, yk);
        const double du = w.u - base.u, dv = w.v - base.v;
        sym[k] = 0.5 * (du + dv) / (h * h);
        anti[k] = 0.5 * (du - dv) / (h * h * h);
        t[k] = h * h;
    }
    double q[3];
    for (int k = 0; k < 3; ++k) q[k] = (sym[k] - sym[k + 1]) / (t[k] - t[k + 1]);
    ButterflyCoefficients c{};
    c.y0 = y0;
    c.c2 = -richardson(sym[0], sym[1], sym[2]);
    c.c3 = richardson(anti[0], anti[1], anti[2]);
    c.c4 = richardson(q[0], q[1], q[2]);
    return c;
}

} // namespace potts
