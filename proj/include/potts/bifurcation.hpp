#pragma once

#include <optional>
#include <vector>

#include "potts/model.hpp"

namespace potts {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool lo_closed = false;
    bool hi_closed = false;

    bool contains(double x) const {
        return (lo_closed ? x >= lo : x > lo) && (hi_closed ? x <= hi : x < hi);
    }
    bool empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }
};

/// Domain of gamma_beta: disjoint, ordered intervals inside (0, 1).
struct DomainIntervals {
    double beta = 0.0;
    std::vector<Interval> intervals;

    bool contains(double x) const;
};

/// Case split by regime 2 < beta < 8/3, 8/3 <= beta < 3 and beta >= 3;
/// empty for beta <= 2. Empty intervals (the middle one at beta = 3) are
/// dropped. At 8/3 the three intervals are (0, 1/4), (1/4, 1/2), (1/2, 3/4).
DomainIntervals domain_intervals(double beta);

/// Roots of x -> (3 beta x - 2)(2 - beta(1 - x))(2 - 3 beta x(1 - x)), ascending,
/// with multiplicity: 2/(3beta), 1 - 2/beta and, for beta >= 8/3, 1/2 -+ sqrt(1 - 8/(3beta))/2.
std::vector<double> discriminant_roots(double beta);

/// Endpoints that keep (x, gamma, 1 - x - gamma) inside the simplex:
/// 1/2 -+ sqrt(1 - 2/beta)/2 and 2/(3 beta).
std::vector<double> simplex_constraint_endpoints(double beta);

/// Smaller root nu2 of the degeneracy condition written as a quadratic in
/// nu2 at fixed nu1 = x. Throws DomainError for x outside D_beta and for the
/// pole x = 2/(3 beta).
double gamma(double beta, double x);

/// Value gamma approaches at the pole x = 2/(3 beta) when the limit is finite
/// (beta = 8/3, limit 1/4); nullopt otherwise.
std::optional<double> gamma_pole_limit(double beta);

/// The quadratic in nu2 at fixed nu1, evaluated at (nu1, nu2).
double degeneracy_quadratic(double beta, double nu1, double nu2);

/// Degeneracy condition in the triangle chart (x, y); identical to degeneracy_lhs.
double degenerate_locus_xy(double beta, double x, double y);

struct SliceSample {
    double x_param;
    SpinDistribution nu;
    AprioriMeasure alpha;
};

/// One connected piece of a constant-beta slice of the bifurcation set:
/// the image of one interval of D_beta under one element of S3.
struct SliceCurve {
    double beta;
    Permutation branch;
    int interval;
    std::vector<SliceSample> samples;
};

inline constexpr int kDefaultSliceSamples = 400;

/// All S3 images of the degenerate-point curve mapped through the
/// catastrophe map. Samples cluster towards interval endpoints.
/// Returns an empty list for beta <= 2.
std::vector<SliceCurve> slice(double beta, int samples_per_interval = kDefaultSliceSamples);

struct SurfaceSample {
    SpinDistribution nu;
    double beta;
    AprioriMeasure alpha;
    int i, j;   // lattice indices, k = density - i - j
};

struct SurfacePatch {
    int sign;   // +1 or -1
    int grid_density;
    std::vector<SurfaceSample> samples;
    int skipped = 0;   // lattice points whose beta or field is not representable
};

/// Roots in beta of the degeneracy condition at fixed nu: S/3 -+ sqrt(S^2/9 - P/3)
/// with S = sum 1/nu_i and P = sum_{i<j} 1/(nu_i nu_j).
double surface_beta(const SpinDistribution& nu, int sign);

/// Both sheets evaluated on the interior of a barycentric lattice.
std::pair<SurfacePatch, SurfacePatch> surface_patches(int grid_density);

/// Serial reference of surface_patches.
std::pair<SurfacePatch, SurfacePatch> surface_patches_serial(int grid_density);

struct ButterflyCoefficients {
    double y0;   // root of the slice equation on the symmetry axis, 1 - 3/beta
    double c2;
    double c3;
    double c4;
};

/// Taylor coefficients of the slice near the symmetric degenerate point
/// (0, y0) in (u, v) coordinates:
///   Delta(u, v) = -c2 x^2 (1, 1) + c3 x^3 (1, -1) + c4 x^4 (1, 1) + O(x^5)
/// with x = (sqrt3/2)(nu1 - nu2). Derivatives of the implicit branch come
/// from Richardson-extrapolated difference quotients at step, step/2, step/4
/// and step/8. Steps much below 1e-2 lose the x^4 term to rounding.
/// Requires 2 < beta < 8/3.
ButterflyCoefficients butterfly_expansion(double beta, double step = 2e-2);

} // namespace potts
