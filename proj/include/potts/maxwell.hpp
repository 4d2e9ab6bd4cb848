#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "potts/stationary.hpp"

namespace potts {

/// Open segment between two points of the field triangle, in the (x, y)
/// chart applied to alpha.
struct Segment {
    CoordXY a;
    CoordXY b;
};

/// Images of a segment under the rotations of the triangle (cyclic
/// permutations of the components): the segment itself first.
std::vector<Segment> rotation_orbit(const Segment& s);

/// Field on the symmetry axis alpha1 = alpha2 with chart coordinate y in (-1/2, 1).
AprioriMeasure axis_field(double y);

/// Upper end of the two-phase segment on the axis for beta > 2 before the
/// triple point takes over: -(1 - r)/(2 + r) with r = (beta - 2) e^{3 - beta}.
double symmetric_segment_end(double beta);

/// Segment of the axis where the two mirror-image minimizers are the only
/// global ones. Empty for beta <= 2; ends at the closed form up to 18/7, at
/// the triple point below 4 log 2 and at the centre from 4 log 2 on.
std::optional<Segment> symmetric_segment(double beta);

/// Two-phase segment on the axis for beta >= 4 log 2: {0} x (-1/2, 0).
Segment beyond_ellis_wang_segment(double beta);

struct CoexistencePoint {
    double beta;
    AprioriMeasure alpha;
    std::vector<SpinDistribution> minimizers;
    double depth;
};

/// Local minima followed along the axis: the asymmetric one with nu1 > nu2,
/// continued upwards from y = -1/4, and the symmetric central one, continued
/// downwards from y = 0. Both lists are sorted by y.
struct AxisBranches {
    double beta;
    std::vector<std::pair<double, SpinDistribution>> asymmetric;
    std::vector<std::pair<double, SpinDistribution>> symmetric;

    /// y-range where both minima exist.
    double overlap_lo() const { return symmetric.front().first; }
    double overlap_hi() const { return asymmetric.back().first; }

    /// f(symmetric) - f(asymmetric) at axis coordinate y inside the overlap.
    double depth_gap(double y) const;
    /// Both minima at y, Newton-refined from the nearest tracked points.
    std::pair<SpinDistribution, SpinDistribution> minima_at(double y) const;
};

/// Requires 18/7 < beta < 4 log 2 (DomainError otherwise).
AxisBranches track_axis_minima(double beta);

/// Field on the axis with three equal-depth global minimizers, found by
/// bisection of AxisBranches::depth_gap. Minimizers are ordered
/// (symmetric, nu1 > nu2, mirror image).
CoexistencePoint triple_point(double beta);

enum class CurveEnd {
    Fold,          // a minimum is about to merge with a saddle (soft eigenvalue below 1e-5)
    TriplePoint,   // a third minimum became deeper: the curve is no longer global
    Truncated,     // corrector failed with the step at its lower bound
    MaxSteps,
};

std::string_view to_string(CurveEnd end);

struct CoexistenceCurve {
    double beta;
    CoexistencePoint origin;
    /// Starts at the triple point; minimizers are (central, off-axis).
    std::vector<CoexistencePoint> points;
    CurveEnd end;
};

/// Pseudo-arclength continuation of the equal-depth locus of the central
/// and the nu1 > nu2 minimum from the triple point into alpha1 > alpha2.
/// The unknowns are the two minima; the field follows as their common
/// catastrophe-map image, so the system does not involve alpha. `step`
/// bounds the arclength step in (mu, nu) space, in (1e-5, 0.1].
CoexistenceCurve coexistence_curve(double beta, double step = 1e-2, int max_steps = 20000);

/// dv/du along the coexistence curve given the two minima.
double coexistence_slope(const SpinDistribution& mu, const SpinDistribution& nu);

} // namespace potts
