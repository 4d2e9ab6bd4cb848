#pragma once

#include <cmath>
#include <functional>
#include <optional>

#include "potts/simplex.hpp"

namespace potts {

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

/// Bisection on a sign-changing bracket down to the given width, then one
/// Newton polish with `derivative` when provided and the polished point stays
/// inside the final bracket. Throws NumericalError if f(lo), f(hi) share a sign.
double bisect_root(const std::function<double(double)>& f, Bracket bracket, double width = 1e-12,
                   const std::function<double(double)>& derivative = {});

} // namespace potts
