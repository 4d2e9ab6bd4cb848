#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "potts/maxwell.hpp"
#include "test_util.hpp"

using namespace potts;

namespace {

const double kEllisWang = 4.0 * std::numbers::ln2;

double closed_form_end(double beta) {
    const double r = (beta - 2.0) * std::exp(3.0 - beta);
    return -(1.0 - r) / (2.0 + r);
}

// Independent equal-depth check: a fresh census at the point's field must
// list every stored minimizer among its global minimizers.
void check_coexistence(const CoexistencePoint& pt, std::size_t expected) {
    const ModelParams p(pt.beta, pt.alpha);
    const auto c = census(p);
    CHECK(c.global_minimizers.size() == expected);
    for (const auto& m : pt.minimizers) {
        CHECK(classify(p, m).kind == StationaryKind::Minimum);
        CHECK(std::abs(free_energy(p, m) - pt.depth) <= 1e-8);
        double best = 1.0;
        for (const auto& g : c.global_minimizers) best = std::min(best, testutil::local_distance(g.nu, m));
        CHECK(best < 1e-6);
    }
}

} // namespace

TEST_CASE("symmetric segment") {
    CHECK_FALSE(symmetric_segment(2.0).has_value());
    CHECK_FALSE(symmetric_segment(1.0).has_value());
    CHECK(symmetric_segment_end(2.0) == doctest::Approx(-0.5).epsilon(1e-15));

    const auto s = symmetric_segment(2.4);
    REQUIRE(s.has_value());
    CHECK(std::abs(s->b.y - closed_form_end(2.4)) <= 1e-12);
    CHECK(std::abs(s->b.y - (-0.0994)) < 1e-4);
    CHECK(s->a.y == -0.5);
    CHECK(s->a.x == 0.0);
    CHECK(s->b.x == 0.0);

    const double mid = 0.5 * (s->a.y + s->b.y);
    const ModelParams p(2.4, axis_field(mid));
    const auto c = census(p);
    REQUIRE(c.global_minimizers.size() == 2);
    const auto& m0 = c.global_minimizers[0].nu;
    const auto& m1 = c.global_minimizers[1].nu;
    CHECK(std::abs(m0[0] - m1[1]) < 1e-8);
    CHECK(std::abs(m0[1] - m1[0]) < 1e-8);
    CHECK(std::abs(m0[2] - m1[2]) < 1e-8);

    // past the endpoint the central minimum alone is global
    CHECK(census(ModelParams(2.4, axis_field(s->b.y + 0.02))).global_minimizers.size() == 1);

    // between the butterfly and Ellis-Wang the segment ends at the triple point
    const auto s26 = symmetric_segment(2.6);
    REQUIRE(s26.has_value());
    CHECK(std::abs(s26->b.y - to_xy(triple_point(2.6).alpha).y) < 1e-12);
    CHECK(symmetric_segment(3.0)->b.y == 0.0);
}

TEST_CASE("rotation orbit") {
    const Segment s{{0.0, -0.5}, {0.0, -0.1}};
    const auto orbit = rotation_orbit(s);
    REQUIRE(orbit.size() == 3);
    CHECK(orbit[0].b.y == s.b.y);
    for (const auto& o : orbit) {
        CHECK(std::hypot(o.a.x, o.a.y) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(std::hypot(o.b.x, o.b.y) == doctest::Approx(0.1).epsilon(1e-12));
    }
}

TEST_CASE("triple point at beta 2.6") {
    const auto t = triple_point(2.6);
    REQUIRE(t.minimizers.size() == 3);
    const ModelParams p(2.6, t.alpha);
    CHECK(std::abs(t.alpha[0] - t.alpha[1]) < 1e-15);
    double lo = 1e9, hi = -1e9;
    for (const auto& m : t.minimizers) {
        const double f = free_energy(p, m);
        lo = std::min(lo, f);
        hi = std::max(hi, f);
    }
    CHECK(hi - lo <= 1e-8);
    // the second and third are mirror images across the axis
    CHECK(std::abs(t.minimizers[1][0] - t.minimizers[2][1]) < 1e-8);
    CHECK(std::abs(t.minimizers[1][1] - t.minimizers[2][0]) < 1e-8);
    CHECK(std::abs(t.minimizers[0][0] - t.minimizers[0][1]) < 1e-8);
    check_coexistence(t, 3);

    // equivariance: permuted fields carry the permuted minimizers
    for (const auto& s : Permutation::all()) {
        const ModelParams ps(2.6, apply_permutation(s, t.alpha));
        const auto c = census(ps);
        REQUIRE(c.global_minimizers.size() == 3);
        for (const auto& m : t.minimizers) {
            const auto img = apply_permutation(s, m);
            double best = 1.0;
            for (const auto& g : c.global_minimizers) best = std::min(best, testutil::local_distance(g.nu, img));
            CHECK(best < 1e-6);
        }
    }
}

TEST_CASE("triple point is the only depth crossing on the axis") {
    const auto br = track_axis_minima(2.6);
    REQUIRE(br.overlap_lo() < br.overlap_hi());
    int changes = 0;
    const int n = 400;
    double prev = br.depth_gap(br.overlap_lo() + 1e-9);
    for (int k = 1; k <= n; ++k) {
        const double y = br.overlap_lo() + (br.overlap_hi() - br.overlap_lo()) * k / n;
        const double cur = br.depth_gap(std::min(y, br.overlap_hi() - 1e-9));
        if ((cur > 0) != (prev > 0)) ++changes;
        prev = cur;
    }
    CHECK(changes == 1);
}

TEST_CASE("triple point approaches the centre at Ellis-Wang") {
    double prev = 1.0;
    for (double beta : {2.6, 2.7, 2.76, 2.772}) {
        const double y = std::abs(to_xy(triple_point(beta).alpha).y);
        CHECK(y < prev);
        prev = y;
    }
    CHECK(prev < 2e-4);
    CHECK_THROWS_AS(triple_point(2.5), DomainError);
    CHECK_THROWS_AS(triple_point(2.8), DomainError);
}

TEST_CASE("coexistence curve at beta 2.6") {
    const double step = 2e-3;
    const auto curve = coexistence_curve(2.6, step);
    CHECK(curve.end == CurveEnd::Fold);
    REQUIRE(curve.points.size() > 10);

    // leaves the axis into alpha1 > alpha2
    CHECK(std::abs(curve.points.front().alpha[0] - curve.points.front().alpha[1]) < 1e-12);
    for (std::size_t k = 1; k < curve.points.size(); ++k) CHECK(curve.points[k].alpha[0] > curve.points[k].alpha[1]);

    auto gap = [](const CoexistencePoint& p) { return testutil::local_distance(p.minimizers[0], p.minimizers[1]); };
    for (std::size_t k = 1; k < curve.points.size(); ++k) {
        const auto& a = curve.points[k - 1];
        const auto& b = curve.points[k];
        double d2 = 0.0;
        for (int m = 0; m < 2; ++m)
            for (int i = 0; i < 2; ++i) d2 += std::pow(a.minimizers[m][i] - b.minimizers[m][i], 2);
        CHECK(std::sqrt(d2) <= step * (1.0 + 1e-9));
    }
    // the two minima close in on each other before the fold
    const std::size_t n = curve.points.size();
    for (std::size_t k = n - 10; k < n; ++k) CHECK(gap(curve.points[k]) < gap(curve.points[k - 1]));

    for (std::size_t k = 1; k < n; ++k) check_coexistence(curve.points[k], 2);

    // tangent against the initial value problem slope, as angles
    for (std::size_t k = 1; k + 1 < n; ++k) {
        const auto a = to_uv(curve.points[k - 1].alpha), b = to_uv(curve.points[k + 1].alpha);
        const double chord = std::atan2(b.v - a.v, b.u - a.u);
        const double slope = coexistence_slope(curve.points[k].minimizers[0], curve.points[k].minimizers[1]);
        double diff = std::abs(std::remainder(chord - std::atan(slope), std::numbers::pi));
        CHECK(diff <= 1e-3);
    }
}

TEST_CASE("coexistence curve closer to Ellis-Wang ends at another triple point") {
    const auto curve = coexistence_curve(2.7);
    CHECK(curve.end == CurveEnd::TriplePoint);
    CHECK_THROWS_AS(coexistence_curve(2.6, 0.5), DomainError);
    CHECK(to_string(CurveEnd::Fold) == "fold");
}

TEST_CASE("segment beyond Ellis-Wang") {
    CHECK_THROWS_AS(beyond_ellis_wang_segment(2.7), DomainError);
    const auto s = beyond_ellis_wang_segment(2.9);
    CHECK(s.a.x == 0.0);
    CHECK(s.b.x == 0.0);
    CHECK(s.a.y == -0.5);
    CHECK(s.b.y == 0.0);

    const auto c = census(ModelParams(2.9, axis_field(-0.25)));
    CHECK(c.global_minimizers.size() == 2);

    const auto ew = census(ModelParams(kEllisWang, AprioriMeasure::uniform()));
    REQUIRE(ew.global_minimizers.size() == 4);
    for (const auto& g : ew.global_minimizers) CHECK(std::abs(g.value - ew.global_minimizers[0].value) <= 1e-8);

    const auto c32 = census(ModelParams(3.2, AprioriMeasure::uniform()));
    CHECK(c32.global_minimizers.size() == 3);
    bool centre_max = false;
    for (const auto& p : c32.points) {
        if (testutil::local_distance(p.nu, SpinDistribution::uniform()) < 1e-9) centre_max = p.kind == StationaryKind::Maximum;
    }
    CHECK(centre_max);
}

TEST_CASE("global minimizers on the axis are mirror symmetric") {
    std::mt19937_64 rng(59);
    for (int k = 0; k < 30; ++k) {
        const double beta = std::uniform_real_distribution<double>(1.5, 3.5)(rng);
        const double y = std::uniform_real_distribution<double>(0.01, 0.9)(rng);
        const ModelParams p(beta, axis_field(y));
        REQUIRE(p.alpha[0] < p.alpha[2]);
        const auto c = census(p);
        for (const auto& g : c.global_minimizers) {
            const SpinDistribution mirror(g.nu[1], g.nu[0], g.nu[2]);
            double best = 1.0;
            for (const auto& h : c.global_minimizers) best = std::min(best, testutil::local_distance(h.nu, mirror));
            CHECK(best < 1e-8);
        }
        // the oracle lands on the same set
        const auto bf = brute_force_global_min(p, 120);
        double best = 1.0;
        for (const auto& g : c.global_minimizers) best = std::min(best, testutil::local_distance(g.nu, bf));
        CHECK(best < 1e-5);
    }
}
