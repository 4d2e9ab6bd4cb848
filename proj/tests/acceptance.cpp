// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "potts/bifurcation.hpp"
#include "potts/critical.hpp"
#include "potts/maxwell.hpp"
#include "potts/stationary.hpp"

using namespace potts;

namespace {

// Tolerances and limits, one block per criterion.
constexpr double kCrossTol = 1e-4, kCrossRef = 2.74564;
constexpr double kTouchTol = 1e-3, kTouchRef = 2.8024;
constexpr double kDepthTol = 1e-8;
constexpr double kDegeneracyTol = 1e-9, kStationaryTol = 1e-10;
constexpr double kButterflyCoefTol = 1e-4, kButterflyC4RelTol = 1e-2;
constexpr double kTangentTol = 1e-3, kSegmentTol = 1e-12;
constexpr double kGradRelTol = 1e-6, kHessRelTol = 1e-5, kFdStep = 1e-6;
constexpr double kHessZeroTol = 1e-12, kGermTol = 1e-4;

const double kEllisWang = 4.0 * std::numbers::ln2;

struct Outcome {
    bool ok;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double time_limit;
    std::function<Outcome()> run;
};

double dist(const SpinDistribution& a, const SpinDistribution& b) {
    const auto p = to_xy(a), q = to_xy(b);
    return std::hypot(p.x - q.x, p.y - q.y);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

SpinDistribution random_spin(std::mt19937_64& rng, double margin) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (;;) {
        double a = u(rng), b = u(rng);
        if (a > b) std::swap(a, b);
        if (a >= margin && b - a >= margin && 1.0 - b >= margin) return SpinDistribution(a, b - a, 1.0 - b);
    }
}

Outcome critical_temperatures() {
    const auto t = all_critical_temps();
    const bool ok = t.butterfly == 18.0 / 7.0 && t.umbilic == 3.0 && t.ellis_wang == 4.0 * std::log(2.0) &&
                    std::abs(t.cross - kCrossRef) <= kCrossTol && std::abs(t.touch - kTouchRef) <= kTouchTol;
    return {ok, fmt("cross=%.10f touch=%.10f", t.cross, t.touch)};
}

Outcome census_sweep() {
    const std::vector<std::pair<double, int>> expect{{1.5, 1}, {2.2, 1}, {2.62, 1}, {2.75, 4},
                                                     {2.9, 4}, {3.0, 3}, {3.5, 3}};
    bool ok = true;
    std::string got;
    for (const auto& [beta, n] : expect) {
        const int m = census(ModelParams(beta, AprioriMeasure::uniform())).n_local_minima;
        ok = ok && m == n;
        got += std::to_string(m) + " ";
    }
    // at 2.9 the oracle's global minimizer is a corner one, below the central minimum
    const ModelParams p(2.9, AprioriMeasure::uniform());
    const auto bf = brute_force_global_min(p, 300);
    const double centre = free_energy(p, SpinDistribution::uniform());
    ok = ok && dist(bf, SpinDistribution::uniform()) > 0.1 && free_energy(p, bf) < centre;
    return {ok, "counts " + got + fmt("| 2.9 oracle depth below centre by %.3g", centre - free_energy(p, bf))};
}

Outcome ellis_wang_point() {
    const auto at = census(ModelParams(kEllisWang, AprioriMeasure::uniform()));
    double lo = 1e9, hi = -1e9;
    int minima = 0;
    for (const auto& s : at.points) {
        if (s.kind != StationaryKind::Minimum) continue;
        ++minima;
        lo = std::min(lo, s.value);
        hi = std::max(hi, s.value);
    }
    bool ok = minima == 4 && hi - lo <= kDepthTol;
    auto centre_minus_corner = [](double beta) {
        const auto c = census(ModelParams(beta, AprioriMeasure::uniform()));
        double centre = NAN, corner = INFINITY;
        for (const auto& s : c.points) {
            if (s.kind != StationaryKind::Minimum) continue;
            if (dist(s.nu, SpinDistribution::uniform()) < 1e-6) {
                centre = s.value;
            } else {
                corner = std::min(corner, s.value);
            }
        }
        return centre - corner;
    };
    const double above = centre_minus_corner(kEllisWang + 0.01);
    const double below = centre_minus_corner(kEllisWang - 0.01);
    ok = ok && above > 0.0 && below < 0.0;
    return {ok, fmt("spread=%.2g, centre-corner at +0.01: %.3g, at -0.01: %.3g", hi - lo, above, below)};
}

Outcome bifurcation_self_consistency() {
    std::size_t n = 0;
    double worst_deg = 0.0, worst_grad = 0.0;
    auto check = [&](double beta, const SpinDistribution& nu, const AprioriMeasure& alpha) {
        worst_deg = std::max(worst_deg, std::abs(degeneracy_lhs(beta, nu)));
        const Vec2 g = gradient_local(ModelParams(beta, alpha), nu);
        worst_grad = std::max(worst_grad, std::hypot(g[0], g[1]));
        ++n;
    };
    for (double beta : {2.3, 2.6, 2.7, 2.75, 2.9, 3.2}) {
        for (const auto& c : slice(beta)) {
            for (const auto& s : c.samples) check(beta, s.nu, s.alpha);
        }
    }
    const auto [plus, minus] = surface_patches(64);
    for (const auto* patch : {&plus, &minus}) {
        for (const auto& s : patch->samples) check(s.beta, s.nu, s.alpha);
    }
    const bool ok = n >= 10000 && worst_deg <= kDegeneracyTol && worst_grad <= kStationaryTol;
    return {ok, fmt("%.0f points, max |deg|=%.2g, max |grad|=%.2g", double(n), worst_deg, worst_grad)};
}

Outcome fold_crossing() {
    const double beta = 2.3;
    const auto curves = slice(beta);
    // generic fold points: away from the cusp tips and the simplex edges
    std::vector<std::pair<const SliceCurve*, std::size_t>> candidates;
    for (const auto& c : curves) {
        for (std::size_t i = 1; i + 1 < c.samples.size(); ++i) {
            const auto& nu = c.samples[i].nu;
            const double sep = std::min({std::abs(nu[0] - nu[1]), std::abs(nu[1] - nu[2]), std::abs(nu[0] - nu[2])});
            if (sep > 0.05 && std::min({nu[0], nu[1], nu[2]}) > 0.02) candidates.emplace_back(&c, i);
        }
    }
    if (candidates.size() < 20) return {false, "too few generic fold samples"};
    int good = 0;
    std::string bad;
    for (int k = 0; k < 20; ++k) {
        const auto [c, i] = candidates[k * candidates.size() / 20];
        const auto a = to_pq(c->samples[i - 1].alpha), b = to_pq(c->samples[i + 1].alpha), m = to_pq(c->samples[i].alpha);
        const double tx = b.p - a.p, ty = b.q - a.q, tn = std::hypot(tx, ty);
        std::vector<int> counts;
        for (double side : {-1.0, 1.0}) {
            const double off = 1e-4 * std::max(1.0, std::hypot(m.p, m.q));
            const CoordPQ pq{m.p - side * off * ty / tn, m.q + side * off * tx / tn};
            const auto cs = census(ModelParams(beta, from_pq(pq)));
            counts.push_back(cs.degenerate ? -1 : cs.n_local_minima);
        }
        std::sort(counts.begin(), counts.end());
        if (counts == std::vector<int>{1, 2}) {
            ++good;
        } else {
            bad += " " + std::to_string(k);
        }
    }
    return {good == 20, std::to_string(good) + "/20 crossings change 1 <-> 2" + (bad.empty() ? "" : ", failed:" + bad)};
}

Outcome butterfly() {
    const auto at = butterfly_expansion(18.0 / 7.0);
    const double c4_ref = 39366.0 / 2401.0;
    const auto lo = butterfly_expansion(2.55), hi = butterfly_expansion(2.6);
    const bool ok = std::abs(at.c2) <= kButterflyCoefTol && std::abs(at.c3) <= kButterflyCoefTol &&
                    std::abs(at.c4 / c4_ref - 1.0) <= kButterflyC4RelTol && lo.c2 * hi.c2 < 0.0;
    return {ok, fmt("c2=%.2g c3=%.2g c4=%.6f", at.c2, at.c3, at.c4) + fmt(", c2(2.55)=%.4f c2(2.6)=%.4f", lo.c2, hi.c2)};
}

Outcome maxwell_sets() {
    const double beta = 2.6;
    // uniqueness: one sign change of the depth gap along the axis
    const auto br = track_axis_minima(beta);
    int changes = 0;
    double prev = br.depth_gap(br.overlap_lo() + 1e-9);
    for (int k = 1; k <= 400; ++k) {
        const double y = std::min(br.overlap_lo() + (br.overlap_hi() - br.overlap_lo()) * k / 400.0, br.overlap_hi() - 1e-9);
        const double cur = br.depth_gap(y);
        changes += (cur > 0) != (prev > 0);
        prev = cur;
    }
    const auto tp = triple_point(beta);
    const ModelParams tpp(beta, tp.alpha);
    double spread = 0.0;
    for (const auto& a : tp.minimizers)
        for (const auto& b : tp.minimizers) spread = std::max(spread, std::abs(free_energy(tpp, a) - free_energy(tpp, b)));
    bool ok = changes == 1 && tp.minimizers.size() == 3 && spread <= kDepthTol;

    // every curve point against a fresh census; tangent against the slope formula
    const auto curve = coexistence_curve(beta, 2e-3);
    int census_fail = 0;
    for (std::size_t k = 1; k < curve.points.size(); ++k) {
        const auto& pt = curve.points[k];
        const ModelParams p(beta, pt.alpha);
        const auto c = census(p);
        bool hit = c.global_minimizers.size() == 2;
        for (const auto& m : pt.minimizers) {
            double best = 1.0;
            for (const auto& g : c.global_minimizers) best = std::min(best, dist(g.nu, m));
            hit = hit && best < 1e-6 && std::abs(free_energy(p, m) - pt.depth) <= kDepthTol;
        }
        census_fail += !hit;
    }
    double worst_angle = 0.0;
    for (std::size_t k = 1; k + 1 < curve.points.size(); ++k) {
        const auto a = to_uv(curve.points[k - 1].alpha), b = to_uv(curve.points[k + 1].alpha);
        const double slope = coexistence_slope(curve.points[k].minimizers[0], curve.points[k].minimizers[1]);
        const double d = std::abs(std::remainder(std::atan2(b.v - a.v, b.u - a.u) - std::atan(slope), std::numbers::pi));
        worst_angle = std::max(worst_angle, d);
    }
    ok = ok && census_fail == 0 && worst_angle <= kTangentTol && curve.points.size() > 10;

    const double r = 0.4 * std::exp(0.6);
    const double closed = -(1.0 - r) / (2.0 + r);
    const auto seg = symmetric_segment(2.4);
    const double seg_err = seg ? std::abs(seg->b.y - closed) : INFINITY;
    ok = ok && seg_err <= kSegmentTol;
    return {ok, fmt("sign changes=%.0f, triple spread=%.2g, ", changes, spread) +
                    fmt("%.0f curve points, census failures=%.0f, worst tangent angle=%.2g, ", double(curve.points.size()),
                        census_fail, worst_angle) +
                    fmt("segment end error=%.2g", seg_err)};
}

Outcome derivatives() {
    std::mt19937_64 rng(2024);
    double worst_g = 0.0, worst_h = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const auto nu = random_spin(rng, 0.02);
        std::uniform_real_distribution<double> lw(-2.0, 2.0);
        const auto alpha = AprioriMeasure::from_weights(std::exp(lw(rng)), std::exp(lw(rng)), std::exp(lw(rng)));
        const ModelParams p(std::uniform_real_distribution<double>(0.2, 5.0)(rng), alpha);
        auto f = [&](double d1, double d2) { return free_energy(p, SpinDistribution::from_local(nu[0] + d1, nu[1] + d2)); };
        auto g = [&](double d1, double d2) { return gradient_local(p, SpinDistribution::from_local(nu[0] + d1, nu[1] + d2)); };
        const double h = kFdStep;
        const Vec2 grad = gradient_local(p, nu);
        const double gs = std::max(1.0, std::hypot(grad[0], grad[1]));
        worst_g = std::max({worst_g, std::abs(grad[0] - (f(h, 0) - f(-h, 0)) / (2 * h)) / gs,
                            std::abs(grad[1] - (f(0, h) - f(0, -h)) / (2 * h)) / gs});
        const Sym2 H = hessian_local(p, nu);
        const double hs = std::max({1.0, std::abs(H.a), std::abs(H.c)});
        const Vec2 g1p = g(h, 0), g1m = g(-h, 0), g2p = g(0, h), g2m = g(0, -h);
        worst_h = std::max({worst_h, std::abs(H.a - (g1p[0] - g1m[0]) / (2 * h)) / hs,
                            std::abs(H.b - (g1p[1] - g1m[1]) / (2 * h)) / hs,
                            std::abs(H.b - (g2p[0] - g2m[0]) / (2 * h)) / hs,
                            std::abs(H.c - (g2p[1] - g2m[1]) / (2 * h)) / hs});
    }
    return {worst_g <= kGradRelTol && worst_h <= kHessRelTol, fmt("gradient rel=%.2g, hessian rel=%.2g", worst_g, worst_h)};
}

Outcome umbilic_germ() {
    const auto H = hessian_local(3.0, SpinDistribution::uniform());
    const double hmax = std::max({std::abs(H.a), std::abs(H.b), std::abs(H.c)});
    const ModelParams p(3.0, AprioriMeasure::uniform());
    auto f = [&](double x, double y) { return free_energy(p, from_xy<SpinDistribution>({x, y})); };
    const double d = 1e-3;
    auto dxx = [&](double x, double y) { return (f(x + d, y) - 2 * f(x, y) + f(x - d, y)) / (d * d); };
    auto dyy = [&](double x, double y) { return (f(x, y + d) - 2 * f(x, y) + f(x, y - d)) / (d * d); };
    const double c30 = (f(2 * d, 0) - 2 * f(d, 0) + 2 * f(-d, 0) - f(-2 * d, 0)) / (2 * d * d * d) / 6.0;
    const double c03 = (f(0, 2 * d) - 2 * f(0, d) + 2 * f(0, -d) - f(0, -2 * d)) / (2 * d * d * d) / 6.0;
    const double c21 = (dxx(0, d) - dxx(0, -d)) / (2 * d) / 2.0;
    const double c12 = (dyy(d, 0) - dyy(-d, 0)) / (2 * d) / 2.0;
    const double err = std::max({std::abs(c30), std::abs(c21 - 1.0), std::abs(c12), std::abs(c03 + 1.0 / 3.0)});
    return {hmax <= kHessZeroTol && err <= kGermTol,
            fmt("|H|=%.2g, x^2y=%.6f, y^3=%.6f", hmax, c21, c03) + fmt(", max coefficient error=%.2g", err)};
}

Outcome morse_sum() {
    std::mt19937_64 rng(77);
    int tested = 0, bad = 0, skipped = 0;
    while (tested < 200) {
        const double beta = std::uniform_real_distribution<double>(0.5, 4.0)(rng);
        std::uniform_real_distribution<double> lw(-2.0, 2.0);
        const ModelParams p(beta, AprioriMeasure::from_weights(std::exp(lw(rng)), std::exp(lw(rng)), std::exp(lw(rng))));
        const auto pts = find_stationary_points(p, kDefaultSeedGrid);
        int sum = 0;
        bool degenerate = false;
        for (const auto& s : pts) {
            switch (s.kind) {
                case StationaryKind::Minimum: ++sum; break;
                case StationaryKind::Saddle: --sum; break;
                case StationaryKind::Maximum: ++sum; break;
                case StationaryKind::Degenerate: degenerate = true; break;
            }
        }
        if (degenerate) {
            ++skipped;
            continue;
        }
        bad += sum != 1;
        ++tested;
    }
    return {bad == 0, fmt("200 parameter points, %.0f violations, %.0f degenerate draws skipped", bad, skipped)};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "critical temperatures", 1.0, critical_temperatures},
        {2, "census regime sweep", 30.0, census_sweep},
        {3, "Ellis-Wang point", 5.0, ellis_wang_point},
        {4, "bifurcation self-consistency", 60.0, bifurcation_self_consistency},
        {5, "fold crossing", 60.0, fold_crossing},
        {6, "butterfly diagnostics", 10.0, butterfly},
        {7, "Maxwell sets", 60.0, maxwell_sets},
        {8, "derivative correctness", 10.0, derivatives},
        {9, "elliptic umbilic germ", 5.0, umbilic_germ},
        {10, "Morse index sum", 60.0, morse_sum},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool ok = o.ok && secs <= c.time_limit;
        failed += !ok;
        std::printf("%s %2d %-30s %7.3fs (limit %gs)  %s\n", ok ? "PASS" : "FAIL", c.id, c.name, secs, c.time_limit,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
