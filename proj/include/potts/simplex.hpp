#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace potts {

/// Raised when an argument lies outside the mathematical domain of an
/// operation (boundary of the simplex, beta out of range, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when an iterative method fails to produce a result.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Tolerances shared by the analysis routines.
struct ToleranceConfig {
    double residual = 1e-10;          // gradient norm accepted as stationary
    double degeneracy = 1e-7;         // |eigenvalue| at or below marks Degenerate
    double merge_radius = 1e-7;       // duplicate roots, Euclidean (x,y) distance
    double depth = 1e-9;              // equal-depth tolerance for global minimizers
    double interior_margin = 1e-12;   // constructor rejects components below this
    double iterate_margin = 1e-9;     // trial points are kept this far from the boundary
};

using Vec2 = std::array<double, 2>;

namespace detail {

inline void check_simplex(const std::array<double, 3>& c, double margin, const char* what) {
    for (double v : c) {
        if (!std::isfinite(v) || v < margin) {
            throw DomainError(std::string(what) + ": component outside the open simplex");
        }
    }
    const double sum = c[0] + c[1] + c[2];
    if (std::abs(sum - 1.0) > 1e-12) {
        throw DomainError(std::string(what) + ": components do not sum to one");
    }
}

} // namespace detail

/// A point of the open unit simplex, stored with all three components.
/// The tag distinguishes spin distributions from a-priori measures.
template <typename Tag>
class SimplexPoint {
public:
    SimplexPoint(double c1, double c2, double c3) : c_{c1, c2, c3} {
        detail::check_simplex(c_, 1e-12, Tag::name);
    }
    explicit SimplexPoint(const std::array<double, 3>& c) : SimplexPoint(c[0], c[1], c[2]) {}

    /// Builds from positive weights by normalizing; rejects non-positive input.
    static SimplexPoint from_weights(double w1, double w2, double w3) {
        const double s = w1 + w2 + w3;
        if (!(w1 > 0.0 && w2 > 0.0 && w3 > 0.0) || !std::isfinite(s)) {
            throw DomainError(std::string(Tag::name) + ": weights must be positive and finite");
        }
        // each component divided separately so equal weights give equal components
        return SimplexPoint(w1 / s, w2 / s, w3 / s);
    }

    /// Builds from local coordinates (c1, c2) with c3 = 1 - c1 - c2.
    static SimplexPoint from_local(double c1, double c2) { return SimplexPoint(c1, c2, 1.0 - c1 - c2); }

    static SimplexPoint uniform() { return SimplexPoint(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0); }

    double operator[](std::size_t i) const { return c_[i]; }
    const std::array<double, 3>& components() const { return c_; }
    Vec2 local() const { return {c_[0], c_[1]}; }

    friend bool operator==(const SimplexPoint&, const SimplexPoint&) = default;

private:
    std::array<double, 3> c_;
};

struct SpinTag { static constexpr const char* name = "SpinDistribution"; };
struct AprioriTag { static constexpr const char* name = "AprioriMeasure"; };

using SpinDistribution = SimplexPoint<SpinTag>;
using AprioriMeasure = SimplexPoint<AprioriTag>;

/// Inverse temperature together with the external field.
struct ModelParams {
    ModelParams(double beta_, AprioriMeasure alpha_) : beta(beta_), alpha(alpha_) {
        if (!std::isfinite(beta) || beta <= 0.0) {
            throw DomainError("ModelParams: beta must be finite and positive");
        }
    }
    double beta;
    AprioriMeasure alpha;
};

struct CoordXY { double x = 0.0, y = 0.0; };
struct CoordUV { double u = 0.0, v = 0.0; };
struct CoordPQ { double p = 0.0, q = 0.0; };

// Equilateral-triangle chart: x = (sqrt3/2)(c1 - c2), y = (3 c3 - 1)/2.
template <typename Tag> CoordXY to_xy(const SimplexPoint<Tag>& s) {
    return {0.5 * std::sqrt(3.0) * (s[0] - s[1]), 0.5 * (3.0 * s[2] - 1.0)};
}

template <typename Point> Point from_xy(const CoordXY& c) {
    const double c3 = (2.0 * c.y + 1.0) / 3.0;
    const double half_diff = c.x / std::sqrt(3.0);
    const double half_sum = (1.0 - c.y) / 3.0;
    return Point(half_sum + half_diff, half_sum - half_diff, c3);
}

// Log-ratio charts on the field simplex.
inline CoordUV to_uv(const AprioriMeasure& a) {
    return {std::log(a[0] / a[2]), std::log(a[1] / a[2])};
}

inline AprioriMeasure from_uv(const CoordUV& c) {
    // shift by the largest exponent to stay finite for large |u|, |v|
    const double m = std::max({c.u, c.v, 0.0});
    return AprioriMeasure::from_weights(std::exp(c.u - m), std::exp(c.v - m), std::exp(-m));
}

inline CoordPQ to_pq(const AprioriMeasure& a) {
    return {std::sqrt(3.0) * std::log(a[0] / a[1]), std::log(a[0] * a[1] / (a[2] * a[2]))};
}

inline AprioriMeasure from_pq(const CoordPQ& c) {
    const double d = c.p / std::sqrt(3.0);
    return from_uv({0.5 * (c.q + d), 0.5 * (c.q - d)});
}

/// Element of S3 acting on simplex points by permuting components:
/// result[i] = input[image[i]].
class Permutation {
public:
    constexpr Permutation() = default;
    constexpr Permutation(int a, int b, int c) : image_{a, b, c} {
        if (!((a != b) && (b != c) && (a != c) && a >= 0 && b >= 0 && c >= 0 && a < 3 && b < 3 && c < 3)) {
            throw DomainError("Permutation: not a bijection of {0,1,2}");
        }
    }

    /// The six elements in a fixed order; element 0 is the identity.
    static constexpr std::array<Permutation, 6> all() {
        return {Permutation(0, 1, 2), Permutation(1, 2, 0), Permutation(2, 0, 1),
                Permutation(1, 0, 2), Permutation(0, 2, 1), Permutation(2, 1, 0)};
    }

    constexpr int operator[](std::size_t i) const { return image_[i]; }

    /// (a * b) applied to s equals a applied to (b applied to s).
    friend constexpr Permutation operator*(const Permutation& a, const Permutation& b) {
        return Permutation(b.image_[a.image_[0]], b.image_[a.image_[1]], b.image_[a.image_[2]]);
    }

    constexpr Permutation inverse() const {
        std::array<int, 3> inv{};
        for (int i = 0; i < 3; ++i) inv[image_[i]] = i;
        return Permutation(inv[0], inv[1], inv[2]);
    }

    constexpr bool is_identity() const { return image_[0] == 0 && image_[1] == 1 && image_[2] == 2; }

    /// Label used in exports, e.g. "012" for the identity.
    std::string label() const {
        return std::string{char('0' + image_[0]), char('0' + image_[1]), char('0' + image_[2])};
    }

    friend constexpr bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::array<int, 3> image_{0, 1, 2};
};

template <typename Tag>
SimplexPoint<Tag> apply_permutation(const Permutation& p, const SimplexPoint<Tag>& s) {
    return SimplexPoint<Tag>(s[p[0]], s[p[1]], s[p[2]]);
}

} // namespace potts
