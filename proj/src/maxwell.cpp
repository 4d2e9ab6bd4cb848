#include "potts/maxwell.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace potts {

namespace {

const double kButterfly = 18.0 / 7.0;
const double kEllisWang = 4.0 * std::numbers::ln2;

// Minima closer than this to the axis count as symmetric (nu1 = nu2).
constexpr double kAxisTolerance = 1e-6;
// Depth tolerance for the coexistence checks.
constexpr double kDepthTolerance = 1e-8;
// Continuation stops once a minimum's soft eigenvalue drops below this:
// closer to the fold the census cannot separate minimum and saddle.
constexpr double kStabilityMargin = 1e-5;

CoordXY rotate(const CoordXY& p, int k) {
    const double a = 2.0 * std::numbers::pi * k / 3.0;
    return {std::cos(a) * p.x - std::sin(a) * p.y, std::sin(a) * p.x + std::cos(a) * p.y};
}

bool is_minimum(const ModelParams& params, const SpinDistribution& nu) {
    return classify(params, nu).kind == StationaryKind::Minimum;
}

bool is_stable_minimum(const ModelParams& params, const SpinDistribution& nu) {
    const auto s = classify(params, nu);
    return s.kind == StationaryKind::Minimum && s.hess_eigenvalues[0] > kStabilityMargin;
}

using Branch = std::vector<std::pair<double, SpinDistribution>>;

// Follows a local minimum along the axis from y0 towards y1 until it
// disappears or y1 is reached.
Branch track(double beta, SpinDistribution start, double y0, double y1, bool symmetric) {
    const double h0 = (y1 - y0) / 50.0;
    double h = h0, y = y0;
    SpinDistribution nu = start;
    Branch path{{y, nu}};
    while (std::abs(h) > 1e-13 && (y1 - y) * h > 0.0) {
        double yn = y + h;
        if ((y1 - yn) * h < 0.0) yn = y1;
        const ModelParams params(beta, axis_field(yn));
        const auto q = refine_stationary(params, nu);
        bool ok = q && is_minimum(params, *q);
        if (ok) {
            const double asym = (*q)[0] - (*q)[1];
            ok = symmetric ? std::abs(asym) < kAxisTolerance : asym > kAxisTolerance;
            const auto& a = q->components();
            const auto& b = nu.components();
            ok = ok && std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]) <= 0.05;
        }
        if (!ok) {
            h *= 0.5;
            continue;
        }
        y = yn;
        nu = *q;
        path.emplace_back(y, nu);
        h = std::abs(h * 1.5) > std::abs(h0) ? h0 : h * 1.5;
    }
    return path;
}

const SpinDistribution& nearest(const Branch& path, double y) {
    return std::min_element(path.begin(), path.end(), [y](const auto& a, const auto& b) {
               return std::abs(a.first - y) < std::abs(b.first - y);
           })->second;
}

SpinDistribution mirror12(const SpinDistribution& nu) { return SpinDistribution(nu[1], nu[0], nu[2]); }

// ---- continuation of the two-phase locus -------------------------------

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<Vec4, 4>;

struct System {
    double beta;

    static SpinDistribution mu_of(const Vec4& z) { return SpinDistribution::from_local(z[0], z[1]); }
    static SpinDistribution nu_of(const Vec4& z) { return SpinDistribution::from_local(z[2], z[3]); }

    static bool inside(const Vec4& z) {
        return z[0] > 1e-9 && z[1] > 1e-9 && 1.0 - z[0] - z[1] > 1e-9 && z[2] > 1e-9 && z[3] > 1e-9 &&
               1.0 - z[2] - z[3] > 1e-9;
    }

    // depth equality and equality of the catastrophe-map images
    std::array<double, 3> residual(const Vec4& z) const {
        const auto mu = mu_of(z), nu = nu_of(z);
        const CoordUV a = catastrophe_map_uv(beta, mu), b = catastrophe_map_uv(beta, nu);
        return {stationary_value(beta, mu) - stationary_value(beta, nu), a.u - b.u, a.v - b.v};
    }

    // rows: gradient of the depth difference, then the Hessians (the
    // derivative of (u, v) in the local chart is the Hessian)
    std::array<Vec4, 3> jacobian(const Vec4& z) const {
        const auto mu = mu_of(z), nu = nu_of(z);
        const Vec2 gm = stationary_value_gradient(beta, mu), gn = stationary_value_gradient(beta, nu);
        const Sym2 hm = hessian_local(beta, mu), hn = hessian_local(beta, nu);
        return {{{gm[0], gm[1], -gn[0], -gn[1]},
                 {hm.a, hm.b, -hn.a, -hn.b},
                 {hm.b, hm.c, -hn.b, -hn.c}}};
    }

    Vec4 tangent(const Vec4& z) const {
        const auto j = jacobian(z);
        Vec4 t{};
        for (int k = 0; k < 4; ++k) {
            std::array<std::array<double, 3>, 3> m{};
            for (int r = 0; r < 3; ++r) {
                int c2 = 0;
                for (int c = 0; c < 4; ++c) {
                    if (c != k) m[r][c2++] = j[r][c];
                }
            }
            const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
            t[k] = (k % 2 == 0 ? 1.0 : -1.0) * det;
        }
        const double n = std::sqrt(t[0] * t[0] + t[1] * t[1] + t[2] * t[2] + t[3] * t[3]);
        if (!(n > 0.0)) throw NumericalError("coexistence_curve: singular Jacobian");
        for (double& v : t) v /= n;
        return t;
    }
};

std::optional<Vec4> solve4(Mat4 a, Vec4 b) {
    for (int c = 0; c < 4; ++c) {
        int p = c;
        for (int r = c + 1; r < 4; ++r) {
            if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
        }
        if (!(std::abs(a[p][c]) > 0.0)) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (int r = c + 1; r < 4; ++r) {
            const double f = a[r][c] / a[c][c];
            for (int k = c; k < 4; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    Vec4 x{};
    for (int r = 3; r >= 0; --r) {
        double s = b[r];
        for (int k = r + 1; k < 4; ++k) s -= a[r][k] * x[k];
        x[r] = s / a[r][r];
    }
    return x;
}

double dot(const Vec4& a, const Vec4& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }

// Newton on the residual plus the arclength constraint t.(z - predictor) = 0.
std::optional<Vec4> correct(const System& sys, const Vec4& predictor, const Vec4& t) {
    Vec4 z = predictor;
    for (int it = 0; it < 30; ++it) {
        if (!System::inside(z)) return std::nullopt;
        const auto r = sys.residual(z);
        const double rc = dot(t, {z[0] - predictor[0], z[1] - predictor[1], z[2] - predictor[2], z[3] - predictor[3]});
        const double norm = std::max({std::abs(r[0]), std::abs(r[1]), std::abs(r[2]), std::abs(rc)});
        if (!std::isfinite(norm)) return std::nullopt;
        if (norm <= 1e-13) return z;
        const auto j = sys.jacobian(z);
        const auto dz = solve4({j[0], j[1], j[2], t}, {-r[0], -r[1], -r[2], -rc});
        if (!dz) return std::nullopt;
        for (int k = 0; k < 4; ++k) z[k] += (*dz)[k];
    }
    const auto r = sys.residual(z);
    if (System::inside(z) && std::max({std::abs(r[0]), std::abs(r[1]), std::abs(r[2])}) <= 1e-11) return z;
    return std::nullopt;
}

CoexistencePoint make_point(double beta, const Vec4& z) {
    const auto mu = System::mu_of(z), nu = System::nu_of(z);
    const AprioriMeasure alpha = catastrophe_map(beta, nu);
    return {beta, alpha, {mu, nu}, free_energy(ModelParams(beta, alpha), nu)};
}

double gap(const Vec4& z) { return std::hypot(z[0] - z[2], z[1] - z[3]); }

} // namespace

std::vector<Segment> rotation_orbit(const Segment& s) {
    return {s, {rotate(s.a, 1), rotate(s.b, 1)}, {rotate(s.a, 2), rotate(s.b, 2)}};
}

AprioriMeasure axis_field(double y) {
    if (!(y > -0.5 && y < 1.0)) throw DomainError("axis_field: y outside (-1/2, 1)");
    return from_xy<AprioriMeasure>({0.0, y});
}

double symmetric_segment_end(double beta) {
    const double r = (beta - 2.0) * std::exp(3.0 - beta);
    return -(1.0 - r) / (2.0 + r);
}

std::optional<Segment> symmetric_segment(double beta) {
    if (!(beta > 2.0)) return std::nullopt;
    double end;
    if (beta <= kButterfly) {
        end = symmetric_segment_end(beta);
    } else if (beta < kEllisWang) {
        end = to_xy(triple_point(beta).alpha).y;
    } else {
        end = 0.0;
    }
    if (!(end > -0.5)) return std::nullopt;
    return Segment{{0.0, -0.5}, {0.0, end}};
}

Segment beyond_ellis_wang_segment(double beta) {
    if (!(beta >= kEllisWang)) throw DomainError("beyond_ellis_wang_segment: requires beta >= 4 log 2");
    return {{0.0, -0.5}, {0.0, 0.0}};
}

double AxisBranches::depth_gap(double y) const {
    const auto [s, a] = minima_at(y);
    const ModelParams params(beta, axis_field(y));
    return free_energy(params, s) - free_energy(params, a);
}

std::pair<SpinDistribution, SpinDistribution> AxisBranches::minima_at(double y) const {
    const ModelParams params(beta, axis_field(y));
    const auto s = refine_stationary(params, nearest(symmetric, y));
    const auto a = refine_stationary(params, nearest(asymmetric, y));
    if (!s || !a) throw NumericalError("triple_point: lost a minimum branch on the axis");
    return {*s, *a};
}

AxisBranches track_axis_minima(double beta) {
    if (!(beta > kButterfly && beta < kEllisWang)) {
        throw DomainError("triple point requires 18/7 < beta < 4 log 2");
    }
    constexpr double y_low = -0.25;
    const auto low = census(ModelParams(beta, axis_field(y_low)), {}, 32);
    const StationaryPoint* a0 = nullptr;
    for (const auto& p : low.points) {
        if (p.kind == StationaryKind::Minimum && p.nu[0] > p.nu[1] + kAxisTolerance) a0 = &p;
    }
    const auto centre = census(ModelParams(beta, axis_field(0.0)), {}, 32);
    const StationaryPoint* s0 = nullptr;
    for (const auto& p : centre.points) {
        if (p.kind != StationaryKind::Minimum || std::abs(p.nu[0] - p.nu[1]) >= kAxisTolerance) continue;
        if (!s0 || p.nu[0] > s0->nu[0]) s0 = &p;
    }
    if (!a0 || !s0) throw NumericalError("triple_point: seed minima not found on the axis");

    AxisBranches br{beta, track(beta, a0->nu, y_low, 0.0, false), track(beta, s0->nu, 0.0, y_low, true)};
    std::reverse(br.symmetric.begin(), br.symmetric.end());
    if (!(br.overlap_lo() < br.overlap_hi())) throw NumericalError("triple_point: minimum branches do not overlap");
    return br;
}

CoexistencePoint triple_point(double beta) {
    const AxisBranches br = track_axis_minima(beta);
    double lo = br.overlap_lo(), hi = br.overlap_hi();
    const double glo = br.depth_gap(lo);
    if (!(glo > 0.0 && br.depth_gap(hi) < 0.0)) throw NumericalError("triple_point: depth gap has no sign change");
    while (hi - lo > 1e-14) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (br.depth_gap(mid) > 0.0 ? lo : hi) = mid;
    }
    const double y = 0.5 * (lo + hi);
    const AprioriMeasure alpha = axis_field(y);
    const auto [s, a] = br.minima_at(y);
    const ModelParams params(beta, alpha);
    return {beta, alpha, {s, a, mirror12(a)}, std::min(free_energy(params, s), free_energy(params, a))};
}

std::string_view to_string(CurveEnd end) {
    switch (end) {
        case CurveEnd::Fold: return "fold";
        case CurveEnd::TriplePoint: return "triple_point";
        case CurveEnd::Truncated: return "truncated";
        case CurveEnd::MaxSteps: return "max_steps";
    }
    return "unknown";
}

double coexistence_slope(const SpinDistribution& mu, const SpinDistribution& nu) {
    return -(nu[0] - mu[0]) / (nu[1] - mu[1]);
}

CoexistenceCurve coexistence_curve(double beta, double step, int max_steps) {
    if (!(step > 1e-5 && step <= 0.1)) throw DomainError("coexistence_curve: step must lie in (1e-5, 0.1]");
    const CoexistencePoint origin = triple_point(beta);
    const System sys{beta};
    Vec4 z{origin.minimizers[0][0], origin.minimizers[0][1], origin.minimizers[1][0], origin.minimizers[1][1]};
    Vec4 t = sys.tangent(z);
    {
        // orient into alpha1 > alpha2: d(u - v) = (H dnu)_1 - (H dnu)_2
        const Sym2 h = hessian_local(beta, System::nu_of(z));
        const double d = (h.a * t[2] + h.b * t[3]) - (h.b * t[2] + h.c * t[3]);
        if (d < 0.0) {
            for (double& v : t) v = -v;
        }
    }
    CoexistenceCurve curve{beta, origin, {make_point(beta, z)}, CurveEnd::MaxSteps};

    constexpr double min_step = 1e-6;
    double ds = step;
    CurveEnd pending = CurveEnd::Truncated;
    for (int n = 0; n < max_steps;) {
        if (ds < min_step) {
            curve.end = pending;
            return curve;
        }
        const Vec4 pred{z[0] + ds * t[0], z[1] + ds * t[1], z[2] + ds * t[2], z[3] + ds * t[3]};
        const auto w = correct(sys, pred, t);
        if (!w) {
            pending = CurveEnd::Truncated;
            ds *= 0.5;
            continue;
        }
        // the corrector moves off the tangent, so the chord can exceed ds
        const double chord = std::sqrt(dot(Vec4{w->at(0) - z[0], w->at(1) - z[1], w->at(2) - z[2], w->at(3) - z[3]},
                                           Vec4{w->at(0) - z[0], w->at(1) - z[1], w->at(2) - z[2], w->at(3) - z[3]}));
        if (chord > step) {
            ds *= 0.98 * step / chord;
            continue;
        }
        const CoexistencePoint cp = make_point(beta, *w);
        const ModelParams params(beta, cp.alpha);
        // the solution branch runs through mu = nu at a cusp and comes back
        // with the roles swapped; a sign flip of mu - nu is the fold as well
        const bool crossed = (w->at(0) - w->at(2)) * (z[0] - z[2]) + (w->at(1) - w->at(3)) * (z[1] - z[3]) < 0.0;
        if (crossed || gap(*w) < 1e-6 || !is_stable_minimum(params, cp.minimizers[0]) ||
            !is_stable_minimum(params, cp.minimizers[1])) {
            pending = CurveEnd::Fold;
            ds *= 0.5;
            continue;
        }
        const auto c = census(params, {}, 32);
        const bool lower = std::any_of(c.points.begin(), c.points.end(), [&](const StationaryPoint& p) {
            return p.kind == StationaryKind::Minimum && p.value < cp.depth - kDepthTolerance;
        });
        if (lower) {
            pending = CurveEnd::TriplePoint;
            ds *= 0.5;
            continue;
        }
        Vec4 tn = sys.tangent(*w);
        if (dot(tn, t) < 0.0) {
            for (double& v : tn) v = -v;
        }
        z = *w;
        t = tn;
        curve.points.push_back(cp);
        ++n;
        ds = std::min(step, ds * 1.5);
    }
    curve.end = CurveEnd::MaxSteps;
    return curve;
}

} // namespace potts
