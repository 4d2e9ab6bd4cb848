#pragma once

namespace potts {

/// The distinguished inverse temperatures, in increasing order.
struct CriticalTemps {
    double butterfly;    // 18/7, butterfly unfolding of the cusps
    double cross;        // corner minima appear in zero field
    double ellis_wang;   // 4 log 2, four coexisting global minima
    double touch;        // central triangle touches the fold lines
    double umbilic;      // 3, elliptic umbilic at the centre
};

/// 3x/((1+2x)(1-x)) - log((1+2x)/(1-x)); its root in (1/4, 1) fixes beta_cross.
double crossing_function(double x);

/// Root of crossing_function above 1/4.
double crossing_parameter();

/// 3 / ((1+2s)(1-s)) at s = crossing_parameter(), about 2.74564.
double beta_cross();

/// log((x-2)/2) + 3 - 2 artanh z - (3x/4)(1 - z) with z = sqrt(1 - 8/(3x)),
/// defined for x >= 8/3. Increasing on [8/3, 3]; its zero is beta_touch.
double touch_function(double x);

/// Unique zero of touch_function in [8/3, 3], about 2.8024.
double beta_touch();

/// p-coordinate of the central triangle vertex on the symmetry axis.
double touch_vertex_p(double beta);
/// p-coordinate of the centre of the fold line.
double touch_fold_centre_p(double beta);

CriticalTemps all_critical_temps();

} // namespace potts
