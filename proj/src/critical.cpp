#include "potts/critical.hpp"

#include <algorithm>
#include <cmath>

#include "potts/roots.hpp"
#include "potts/simplex.hpp"

namespace potts {

namespace {

double artanh(double z) { return 0.5 * std::log((1.0 + z) / (1.0 - z)); }

double touch_z(double x) {
    if (x < 8.0 / 3.0) throw DomainError("touch_function: argument below 8/3");
    return std::clamp(std::sqrt(std::max(0.0, 1.0 - 8.0 / (3.0 * x))), 0.0, std::nextafter(1.0, 0.0));
}

} // namespace

double crossing_function(double x) {
    return 3.0 * x / ((1.0 + 2.0 * x) * (1.0 - x)) - std::log((1.0 + 2.0 * x) / (1.0 - x));
}

double crossing_parameter() {
    // d/dx of 3x/((1+2x)(1-x)) is 3(1+2x^2)/((1+2x)(1-x))^2
    const auto derivative = [](double x) {
        const double d = (1.0 + 2.0 * x) * (1.0 - x);
        return 3.0 * (1.0 + 2.0 * x * x) / (d * d) - 3.0 / d;
    };
    return bisect_root(crossing_function, {0.25, 1.0 - 1e-9}, 1e-12, derivative);
}

double beta_cross() {
    const double s = crossing_parameter();
    return 3.0 / ((1.0 + 2.0 * s) * (1.0 - s));
}

double touch_function(double x) {
    const double z = touch_z(x);
    return std::log((x - 2.0) / 2.0) + 3.0 - 2.0 * artanh(z) - 0.75 * x * (1.0 - z);
}

double beta_touch() { return bisect_root(touch_function, {8.0 / 3.0, 3.0}, 1e-12); }

double touch_vertex_p(double beta) { return std::sqrt(3.0) * (std::log(beta - 2.0) + 3.0 - beta); }

double touch_fold_centre_p(double beta) {
    const double z = touch_z(beta);
    return std::sqrt(3.0) * (std::log(2.0) - 0.25 * beta - 0.75 * beta * z + 2.0 * artanh(z));
}

CriticalTemps all_critical_temps() {
    CriticalTemps t{18.0 / 7.0, beta_cross(), 4.0 * std::log(2.0), beta_touch(), 3.0};
    if (!(t.butterfly < t.cross && t.cross < t.ellis_wang && t.ellis_wang < t.touch && t.touch < t.umbilic)) {
        throw NumericalError("all_critical_temps: ordering of the critical temperatures violated");
    }
    return t;
}

} // namespace potts
