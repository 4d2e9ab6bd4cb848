#pragma once

#include <string>
#include <vector>

#include "potts/export.hpp"

namespace potts::plot {

enum class Chart { PQ, UV, XY };

struct Extent {
    double xmin = -1.5, xmax = 1.5, ymin = -1.5, ymax = 1.5;
};

struct Point2 {
    double x, y;
};

using Polyline = std::vector<Point2>;

struct CellLabel {
    Point2 at;
    std::string text;
};

struct PlotSpec {
    Chart chart = Chart::PQ;
    Extent extent;
    int width = 640;
    int height = 640;
    std::string title;
};

/// Square (p, q) extent around the finite cusp tips of the slice at beta,
/// with margin; half-width 1 when there is no slice.
Extent slice_extent(double beta);

/// Field coordinates of alpha in the given chart.
Point2 field_point(Chart chart, const AprioriMeasure& alpha);
/// Inverse of field_point.
AprioriMeasure field_from_point(Chart chart, const Point2& p);

/// One polyline per slice curve. Runs of points far outside `keep` are cut
/// out so that curves escaping to infinity do not bloat the output.
std::vector<Polyline> slice_polylines(const std::vector<SliceCurve>& curves, Chart chart, const Extent& keep);

/// Two-phase segments (sampled) and coexistence curves.
std::vector<Polyline> maxwell_polylines(const io::MaxwellDiagram& d, Chart chart, const Extent& keep);

/// Self-contained SVG: bifurcation curves solid, Maxwell curves dashed,
/// labels as text at their anchor points.
std::string render_svg(const PlotSpec& spec, const std::vector<Polyline>& bifurcation,
                       const std::vector<Polyline>& maxwell, const std::vector<CellLabel>& labels);

/// Free-energy landscape over the spin triangle in (x, y): lattice triangles
/// shaded by value, local minima marked.
std::string render_potential_svg(const ModelParams& params, int grid_density,
                                 const std::vector<StationaryPoint>& stationary, const std::string& title);

} // namespace potts::plot
