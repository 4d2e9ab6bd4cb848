#include "potts/roots.hpp"

namespace potts {

double bisect_root(const std::function<double(double)>& f, Bracket bracket, double width,
                   const std::function<double(double)>& derivative) {
    double lo = bracket.lo, hi = bracket.hi;
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (!(std::signbit(flo) != std::signbit(fhi))) {
        throw NumericalError("bisect_root: bracket does not enclose a sign change");
    }
    while (hi - lo > width) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if (std::signbit(fm) == std::signbit(flo)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    double root = 0.5 * (lo + hi);
    if (derivative) {
        const double d = derivative(root);
        if (d != 0.0 && std::isfinite(d)) {
            const double polished = root - f(root) / d;
            if (polished >= lo && polished <= hi) root = polished;
        }
    }
    return root;
}

} // namespace potts
