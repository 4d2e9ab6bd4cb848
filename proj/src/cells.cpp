#include "potts/cells.hpp"

#include <algorithm>
#include <cmath>

namespace potts::plot {

namespace {

// Liang-Barsky clip of the segment a-b to the extent.
bool clip(Point2& a, Point2& b, const Extent& e) {
    double t0 = 0.0, t1 = 1.0;
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double p[4] = {-dx, dx, -dy, dy};
    const double q[4] = {a.x - e.xmin, e.xmax - a.x, a.y - e.ymin, e.ymax - a.y};
    for (int i = 0; i < 4; ++i) {
        if (p[i] == 0.0) {
            if (q[i] < 0.0) return false;
            continue;
        }
        const double r = q[i] / p[i];
        if (p[i] < 0.0) {
            if (r > t1) return false;
            t0 = std::max(t0, r);
        } else {
            if (r < t0) return false;
            t1 = std::min(t1, r);
        }
    }
    const Point2 a0 = a;
    a = {a0.x + t0 * dx, a0.y + t0 * dy};
    b = {a0.x + t1 * dx, a0.y + t1 * dy};
    return true;
}

} // namespace

Point2 Raster::centre(int ix, int iy) const {
    const double dx = (extent.xmax - extent.xmin) / n, dy = (extent.ymax - extent.ymin) / n;
    return {extent.xmin + (ix + 0.5) * dx, extent.ymax - (iy + 0.5) * dy};
}

std::optional<std::pair<int, int>> Raster::pixel(const Point2& p) const {
    const double fx = (p.x - extent.xmin) / (extent.xmax - extent.xmin) * n;
    const double fy = (extent.ymax - p.y) / (extent.ymax - extent.ymin) * n;
    if (!(fx >= 0.0 && fx < n && fy >= 0.0 && fy < n)) return std::nullopt;
    return std::pair{static_cast<int>(fx), static_cast<int>(fy)};
}

Raster rasterize(const std::vector<Polyline>& curves, const Extent& extent, int resolution) {
    if (resolution < 8) throw DomainError("rasterize: resolution too small");
    Raster r{resolution, extent, std::vector<std::uint8_t>(std::size_t(resolution) * resolution, 0)};
    const double sx = resolution / (extent.xmax - extent.xmin), sy = resolution / (extent.ymax - extent.ymin);
    for (const auto& line : curves) {
        for (std::size_t k = 1; k < line.size(); ++k) {
            Point2 a = line[k - 1], b = line[k];
            if (!clip(a, b, extent)) continue;
            const double ax = (a.x - extent.xmin) * sx, ay = (extent.ymax - a.y) * sy;
            const double bx = (b.x - extent.xmin) * sx, by = (extent.ymax - b.y) * sy;
            // sub-pixel steps leave an 8-connected trace that a 4-connected fill cannot cross
            const int steps = static_cast<int>(std::ceil(2.0 * std::max(std::abs(bx - ax), std::abs(by - ay)))) + 1;
            for (int s = 0; s <= steps; ++s) {
                const double t = double(s) / steps;
                const int ix = std::clamp(static_cast<int>(ax + t * (bx - ax)), 0, resolution - 1);
                const int iy = std::clamp(static_cast<int>(ay + t * (by - ay)), 0, resolution - 1);
                r.wall[std::size_t(iy) * resolution + ix] = 1;
            }
        }
    }
    return r;
}

int CellMap::cell_at(const Point2& p) const {
    const auto px = raster.pixel(p);
    if (!px) return -1;
    return label[std::size_t(px->second) * raster.n + px->first];
}

CellMap find_cells(const Raster& raster) {
    const int n = raster.n;
    CellMap map{raster, std::vector<int>(std::size_t(n) * n, -1), {}};
    const auto at = [n](int x, int y) { return std::size_t(y) * n + x; };

    // chessboard distance to the nearest wall or to the frame
    std::vector<int> dist(std::size_t(n) * n, 0);
    const auto d = [&](int x, int y) { return (x < 0 || y < 0 || x >= n || y >= n) ? 0 : dist[at(x, y)]; };
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
            if (raster.wall[at(x, y)]) continue;
            dist[at(x, y)] = 1 + std::min({d(x - 1, y), d(x - 1, y - 1), d(x, y - 1), d(x + 1, y - 1)});
        }
    }
    for (int y = n - 1; y >= 0; --y) {
        for (int x = n - 1; x >= 0; --x) {
            if (raster.wall[at(x, y)]) continue;
            dist[at(x, y)] = std::min(dist[at(x, y)],
                                      1 + std::min({d(x + 1, y), d(x + 1, y + 1), d(x, y + 1), d(x - 1, y + 1)}));
        }
    }

    std::vector<std::pair<int, int>> stack;
    for (int y0 = 0; y0 < n; ++y0) {
        for (int x0 = 0; x0 < n; ++x0) {
            if (raster.wall[at(x0, y0)] || map.label[at(x0, y0)] >= 0) continue;
            const int id = static_cast<int>(map.cells.size());
            std::vector<std::pair<int, int>> members;
            stack.push_back({x0, y0});
            map.label[at(x0, y0)] = id;
            while (!stack.empty()) {
                const auto [x, y] = stack.back();
                stack.pop_back();
                members.push_back({x, y});
                const int nb[4][2] = {{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}};
                for (const auto& q : nb) {
                    if (q[0] < 0 || q[1] < 0 || q[0] >= n || q[1] >= n) continue;
                    const std::size_t k = at(q[0], q[1]);
                    if (raster.wall[k] || map.label[k] >= 0) continue;
                    map.label[k] = id;
                    stack.push_back({q[0], q[1]});
                }
            }
            double cx = 0.0, cy = 0.0;
            for (const auto& [x, y] : members) {
                cx += x + 0.5;
                cy += y + 0.5;
            }
            cx /= members.size();
            cy /= members.size();
            Cell cell{id, members.size(), {}, std::nullopt, std::nullopt, false};
            const double px = raster.extent.xmin + cx * (raster.extent.xmax - raster.extent.xmin) / n;
            const double py = raster.extent.ymax - cy * (raster.extent.ymax - raster.extent.ymin) / n;
            cell.centroid = {px, py};
            double best = INFINITY;
            for (const auto& [x, y] : members) {
                if (dist[at(x, y)] < 2) continue;
                const double e = std::hypot(x + 0.5 - cx, y + 0.5 - cy);
                if (e < best) {
                    best = e;
                    cell.probe = raster.centre(x, y);
                }
            }
            map.cells.push_back(cell);
        }
    }
    return map;
}

CellMap label_cells(double beta, const std::vector<Polyline>& curves, Chart chart, const Extent& extent,
                    const ToleranceConfig& tol, int seed_grid, int resolution) {
    CellMap map = find_cells(rasterize(curves, extent, resolution));
    for (auto& cell : map.cells) {
        if (!cell.probe) continue;
        const MinimaCensus c = census(ModelParams(beta, field_from_point(chart, *cell.probe)), tol, seed_grid);
        cell.minima = c.n_local_minima;
        cell.degenerate = c.degenerate;
    }
    return map;
}

std::vector<CellLabel> cell_labels(const CellMap& map) {
    std::vector<CellLabel> out;
    for (const auto& cell : map.cells) {
        if (cell.probe && cell.minima) {
            out.push_back({*cell.probe, std::to_string(*cell.minima)});
        } else {
            out.push_back({cell.centroid, "?"});
        }
    }
    return out;
}

} // namespace potts::plot
