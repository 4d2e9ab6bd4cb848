#include "potts/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace potts::plot {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

bool inside(const Extent& e, const Point2& p) {
    return p.x >= e.xmin && p.x <= e.xmax && p.y >= e.ymin && p.y <= e.ymax;
}

// Splits a point sequence into runs that stay within `keep`; one point
// outside is kept at each end of a run so lines reach the border.
void append_clipped(std::vector<Polyline>& out, const Polyline& pts, const Extent& keep) {
    Polyline run;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const bool in = inside(keep, pts[i]);
        const bool next_in = i + 1 < pts.size() && inside(keep, pts[i + 1]);
        const bool prev_in = i > 0 && inside(keep, pts[i - 1]);
        if (in || next_in || prev_in) {
            run.push_back(pts[i]);
        }
        if (!in && !next_in && !run.empty()) {
            if (run.size() > 1) out.push_back(run);
            run.clear();
        }
    }
    if (run.size() > 1) out.push_back(run);
}

Extent widened(const Extent& e) {
    const double wx = e.xmax - e.xmin, wy = e.ymax - e.ymin;
    return {e.xmin - wx, e.xmax + wx, e.ymin - wy, e.ymax + wy};
}

struct Frame {
    const PlotSpec& spec;
    double px(double x) const { return (x - spec.extent.xmin) / (spec.extent.xmax - spec.extent.xmin) * spec.width; }
    double py(double y) const { return (spec.extent.ymax - y) / (spec.extent.ymax - spec.extent.ymin) * spec.height; }
};

std::string points_attr(const Frame& f, const Polyline& line) {
    std::string s;
    for (const auto& p : line) {
        if (!s.empty()) s += ' ';
        s += num(f.px(p.x)) + ',' + num(f.py(p.y));
    }
    return s;
}

const char* axis_names(Chart c) {
    switch (c) {
        case Chart::PQ: return "p q";
        case Chart::UV: return "u v";
        case Chart::XY: return "x y";
    }
    return "x y";
}

// Piecewise-linear colour ramp from dark blue through teal to pale yellow.
std::string ramp(double t) {
    static constexpr std::array<std::array<double, 3>, 4> stops{
        {{0.16, 0.11, 0.37}, {0.13, 0.45, 0.55}, {0.36, 0.73, 0.42}, {0.99, 0.91, 0.15}}};
    t = std::clamp(t, 0.0, 1.0) * 3.0;
    const int k = std::min(2, static_cast<int>(t));
    const double w = t - k;
    char buf[16];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", int(255 * (stops[k][0] * (1 - w) + stops[k + 1][0] * w)),
                  int(255 * (stops[k][1] * (1 - w) + stops[k + 1][1] * w)),
                  int(255 * (stops[k][2] * (1 - w) + stops[k + 1][2] * w)));
    return buf;
}

} // namespace

Extent slice_extent(double beta) {
    if (!(beta > 2.0)) return {-1.0, 1.0, -1.0, 1.0};
    // cusp tips sit on the symmetry lines at the discriminant roots
    double r = 0.0;
    for (double x : discriminant_roots(beta)) {
        if (!(x > 0.0 && x < 1.0) || std::abs(3.0 * beta * x - 2.0) < 1e-12) continue;
        const auto alpha = catastrophe_map(beta, SpinDistribution(x, 0.5 * (1.0 - x), 1.0 - x - 0.5 * (1.0 - x)));
        const CoordPQ pq = to_pq(alpha);
        r = std::max(r, std::hypot(pq.p, pq.q));
    }
    const double h = std::clamp(1.6 * r, 0.05, 4.0);
    return {-h, h, -h, h};
}

Point2 field_point(Chart chart, const AprioriMeasure& alpha) {
    switch (chart) {
        case Chart::PQ: {
            const CoordPQ c = to_pq(alpha);
            return {c.p, c.q};
        }
        case Chart::UV: {
            const CoordUV c = to_uv(alpha);
            return {c.u, c.v};
        }
        case Chart::XY: {
            const CoordXY c = to_xy(alpha);
            return {c.x, c.y};
        }
    }
    return {0.0, 0.0};
}

AprioriMeasure field_from_point(Chart chart, const Point2& p) {
    switch (chart) {
        case Chart::PQ: return from_pq({p.x, p.y});
        case Chart::UV: return from_uv({p.x, p.y});
        case Chart::XY: return from_xy<AprioriMeasure>({p.x, p.y});
    }
    return AprioriMeasure::uniform();
}

std::vector<Polyline> slice_polylines(const std::vector<SliceCurve>& curves, Chart chart, const Extent& keep) {
    std::vector<Polyline> out;
    for (const auto& c : curves) {
        Polyline pts;
        pts.reserve(c.samples.size());
        for (const auto& s : c.samples) pts.push_back(field_point(chart, s.alpha));
        append_clipped(out, pts, widened(keep));
    }
    return out;
}

std::vector<Polyline> maxwell_polylines(const io::MaxwellDiagram& d, Chart chart, const Extent& keep) {
    std::vector<Polyline> out;
    constexpr int n = 400;
    for (const auto& seg : d.segments) {
        Polyline pts;
        for (int k = 0; k <= n; ++k) {
            // cluster towards the first endpoint, which lies on the boundary
            const double t = 0.5 * (1.0 - std::cos(std::numbers::pi * k / n));
            const CoordXY xy{seg.a.x + t * (seg.b.x - seg.a.x), seg.a.y + t * (seg.b.y - seg.a.y)};
            try {
                pts.push_back(field_point(chart, from_xy<AprioriMeasure>(xy)));
            } catch (const DomainError&) {
                // endpoint on the boundary of the simplex
            }
        }
        append_clipped(out, pts, widened(keep));
    }
    for (const auto& curve : d.curves) {
        Polyline pts;
        for (const auto& p : curve.points) pts.push_back(field_point(chart, p.alpha));
        append_clipped(out, pts, widened(keep));
    }
    return out;
}

std::string render_svg(const PlotSpec& spec, const std::vector<Polyline>& bifurcation,
                       const std::vector<Polyline>& maxwell, const std::vector<CellLabel>& labels) {
    const Frame f{spec};
    std::ostringstream s;
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\"" << spec.height
      << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height << "\">\n";
    s << "<defs><clipPath id=\"frame\"><rect x=\"0\" y=\"0\" width=\"" << spec.width << "\" height=\""
      << spec.height << "\"/></clipPath></defs>\n";
    s << "<rect x=\"0\" y=\"0\" width=\"" << spec.width << "\" height=\"" << spec.height
      << "\" style=\"fill:#ffffff;stroke:#444444;stroke-width:1\"/>\n";

    // axes through the origin of the chart
    s << "<g style=\"stroke:#bbbbbb;stroke-width:0.6\">\n";
    s << "<line x1=\"0\" y1=\"" << num(f.py(0)) << "\" x2=\"" << spec.width << "\" y2=\"" << num(f.py(0)) << "\"/>\n";
    s << "<line x1=\"" << num(f.px(0)) << "\" y1=\"0\" x2=\"" << num(f.px(0)) << "\" y2=\"" << spec.height
      << "\"/>\n</g>\n";

    s << "<g clip-path=\"url(#frame)\" style=\"fill:none;stroke:#1f3b73;stroke-width:1.2;stroke-linejoin:round\">\n";
    for (const auto& line : bifurcation) s << "<polyline points=\"" << points_attr(f, line) << "\"/>\n";
    s << "</g>\n";
    s << "<g clip-path=\"url(#frame)\" style=\"fill:none;stroke:#b22222;stroke-width:1.2;stroke-dasharray:6,4\">\n";
    for (const auto& line : maxwell) s << "<polyline points=\"" << points_attr(f, line) << "\"/>\n";
    s << "</g>\n";

    s << "<g style=\"font-family:sans-serif;font-size:12px;fill:#111111;text-anchor:middle\">\n";
    for (const auto& l : labels) {
        s << "<text x=\"" << num(f.px(l.at.x)) << "\" y=\"" << num(f.py(l.at.y) + 4.0) << "\">"
          << xml_escape(l.text) << "</text>\n";
    }
    s << "</g>\n";
    s << "<text x=\"8\" y=\"18\" style=\"font-family:sans-serif;font-size:13px;fill:#111111\">"
      << xml_escape(spec.title) << "</text>\n";
    s << "<text x=\"" << spec.width - 8 << "\" y=\"" << spec.height - 8
      << "\" style=\"font-family:sans-serif;font-size:11px;fill:#666666;text-anchor:end\">" << axis_names(spec.chart)
      << "</text>\n";
    s << "</svg>\n";
    return s.str();
}

std::string render_potential_svg(const ModelParams& params, int grid_density,
                                 const std::vector<StationaryPoint>& stationary, const std::string& title) {
    PlotSpec spec;
    spec.chart = Chart::XY;
    spec.extent = {-0.95, 0.95, -0.65, 1.1};
    spec.title = title;
    const Frame f{spec};
    const int n = grid_density;

    const auto value = [&](int i, int j) -> std::optional<double> {
        const int k = n - i - j;
        if (i <= 0 || j <= 0 || k <= 0) return std::nullopt;
        return free_energy(params, SpinDistribution(double(i) / n, double(j) / n, double(k) / n));
    };
    const auto corner = [&](int i, int j) {
        // lattice vertices may lie on the boundary, so no SpinDistribution here
        return Point2{0.5 * std::sqrt(3.0) * (i - j) / n, 0.5 * (3.0 * (n - i - j) / n - 1.0)};
    };
    double lo = INFINITY, hi = -INFINITY;
    for (int i = 1; i < n; ++i) {
        for (int j = 1; i + j < n; ++j) {
            const double v = *value(i, j);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    std::ostringstream s;
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\"" << spec.height
      << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height << "\">\n";
    s << "<rect x=\"0\" y=\"0\" width=\"" << spec.width << "\" height=\"" << spec.height
      << "\" style=\"fill:#ffffff\"/>\n<g style=\"stroke:none\">\n";
    const auto tri = [&](std::array<std::array<int, 2>, 3> v) {
        double sum = 0.0;
        for (const auto& c : v) {
            const auto val = value(c[0], c[1]);
            if (!val) return;
            sum += *val;
        }
        Polyline pts;
        for (const auto& c : v) pts.push_back(corner(c[0], c[1]));
        s << "<polygon points=\"" << points_attr(f, pts) << "\" style=\"fill:" << ramp((sum / 3 - lo) / (hi - lo))
          << "\"/>\n";
    };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; i + j < n; ++j) {
            tri({{{i, j}, {i + 1, j}, {i, j + 1}}});
            if (i + j + 2 <= n) tri({{{i + 1, j}, {i + 1, j + 1}, {i, j + 1}}});
        }
    }
    s << "</g>\n<g style=\"stroke:#ffffff;stroke-width:1\">\n";
    for (const auto& p : stationary) {
        const CoordXY c = to_xy(p.nu);
        const char* fill = p.kind == StationaryKind::Minimum ? "#d62728"
                           : p.kind == StationaryKind::Saddle ? "#ff7f0e"
                                                              : "#7f7f7f";
        s << "<circle cx=\"" << num(f.px(c.x)) << "\" cy=\"" << num(f.py(c.y)) << "\" r=\"4\" style=\"fill:" << fill
          << "\"/>\n";
    }
    s << "</g>\n<text x=\"8\" y=\"18\" style=\"font-family:sans-serif;font-size:13px;fill:#111111\">"
      << xml_escape(title) << "</text>\n</svg>\n";
    return s.str();
}

} // namespace potts::plot
