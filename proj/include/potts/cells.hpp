#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "potts/svg.hpp"

namespace potts::plot {

inline constexpr int kCellResolution = 512;

/// Square raster of the plot extent; pixel (ix, iy) has its centre at
/// (xmin + (ix + 1/2) dx, ymax - (iy + 1/2) dy).
struct Raster {
    int n;
    Extent extent;
    std::vector<std::uint8_t> wall;   // row-major, 1 where a curve passes

    Point2 centre(int ix, int iy) const;
    std::optional<std::pair<int, int>> pixel(const Point2& p) const;
};

Raster rasterize(const std::vector<Polyline>& curves, const Extent& extent, int resolution = kCellResolution);

struct Cell {
    int id;
    std::size_t pixels;
    Point2 centroid;
    /// Pixel centre nearest the centroid among pixels with a clear pixel
    /// between them and any wall; unset for cells too thin to probe.
    std::optional<Point2> probe;
    /// Local minima count at the probe, filled by label_cells.
    std::optional<int> minima;
    bool degenerate = false;
};

struct CellMap {
    Raster raster;
    std::vector<int> label;   // per pixel, -1 on walls
    std::vector<Cell> cells;

    /// Cell containing p, or -1 on a wall or outside the extent.
    int cell_at(const Point2& p) const;
};

/// Connected components (4-neighbourhood) of the non-wall pixels.
CellMap find_cells(const Raster& raster);

/// Rasterizes the curves, finds the cells and runs a census at each probe
/// point (field from the probe via `chart`).
CellMap label_cells(double beta, const std::vector<Polyline>& curves, Chart chart, const Extent& extent,
                    const ToleranceConfig& tol = {}, int seed_grid = kDefaultSeedGrid,
                    int resolution = kCellResolution);

/// Text labels for render_svg: the count, or "?" for unresolved cells.
std::vector<CellLabel> cell_labels(const CellMap& map);

} // namespace potts::plot
