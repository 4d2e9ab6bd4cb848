// potts-landscape: phase-diagram geometry of the three-state Curie-Weiss
// Potts model in an external field.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "potts/bifurcation.hpp"
#include "potts/cells.hpp"
#include "potts/critical.hpp"
#include "potts/export.hpp"
#include "potts/maxwell.hpp"
#include "potts/stationary.hpp"
#include "potts/svg.hpp"

using namespace potts;

namespace {

constexpr int kExitDomain = 2;
constexpr int kExitNumerical = 3;

struct Common {
    std::string format = "csv";
    std::string out;
    double tol = ToleranceConfig{}.residual;
    int seed_grid = kDefaultSeedGrid;

    ToleranceConfig tolerances() const {
        ToleranceConfig t;
        t.residual = tol;
        return t;
    }
};

// Writes to --out, or stdout when no path was given.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw std::runtime_error("cannot open " + path + " for writing");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void emit(const Common& c, const io::Table& t, const std::vector<std::string>& notes = {}) {
    Sink sink(c.out);
    if (c.format == "json") {
        sink.stream() << io::to_json(t).dump(1) << '\n';
    } else {
        io::write_csv(sink.stream(), t);
        for (const auto& n : notes) sink.stream() << "# " << n << '\n';
    }
}

void require_format(const Common& c, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (c.format == a) return;
    }
    throw DomainError("format '" + c.format + "' is not available for this command");
}

AprioriMeasure parse_field(const std::vector<double>& alpha, const std::vector<double>& uv) {
    if (!alpha.empty()) {
        if (alpha.size() != 3) throw DomainError("--alpha needs three components");
        return AprioriMeasure::from_weights(alpha[0], alpha[1], alpha[2]);
    }
    if (!uv.empty()) {
        if (uv.size() != 2) throw DomainError("--uv needs two components");
        return from_uv({uv[0], uv[1]});
    }
    return AprioriMeasure::uniform();
}

plot::Chart parse_chart(const std::string& s) {
    if (s == "pq") return plot::Chart::PQ;
    if (s == "uv") return plot::Chart::UV;
    if (s == "xy") return plot::Chart::XY;
    throw DomainError("unknown chart " + s);
}

std::string describe(const SpinDistribution& nu) {
    std::ostringstream s;
    s.precision(17);
    s << '(' << nu[0] << ", " << nu[1] << ", " << nu[2] << ')';
    return s.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stationary points, bifurcation sets and Maxwell sets of the 3-state Curie-Weiss Potts model"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json", "svg", "obj"}));
    app.add_option("--out", common.out, "Output path (default: stdout)");
    app.add_option("--tol", common.tol, "Newton residual tolerance")->check(CLI::PositiveNumber);
    app.add_option("--seed-grid", common.seed_grid, "Seed lattice density for censuses")->check(CLI::Range(8, 4096));
    app.fallthrough();

    double beta = 0.0;
    int samples = kDefaultSliceSamples;
    bool label = false;
    std::string chart_name = "pq";
    double half_width = 0.0;
    auto* slice_cmd = app.add_subcommand("slice", "Constant-beta slice of the bifurcation set");
    slice_cmd->add_option("--beta", beta, "Inverse temperature")->required();
    slice_cmd->add_option("--samples", samples, "Samples per interval of the domain")->check(CLI::Range(2, 1000000));
    slice_cmd->add_flag("--label-cells", label, "Census count in every cell of the complement");
    slice_cmd->add_option("--chart", chart_name, "Field chart for svg and cells")->check(CLI::IsMember({"pq", "uv", "xy"}));
    slice_cmd->add_option("--extent", half_width, "Half-width of the plotted square (default: fit the cusps)")
        ->check(CLI::PositiveNumber);

    double beta_max = 6.0;
    int grid = 64;
    auto* surface_cmd = app.add_subcommand("surface", "Bifurcation set as two sheets over the spin simplex");
    surface_cmd->add_option("--beta-max", beta_max, "Clip samples above this inverse temperature");
    surface_cmd->add_option("--grid", grid, "Barycentric lattice density")->check(CLI::Range(16, 4096));

    std::vector<double> alpha, uv;
    auto* census_cmd = app.add_subcommand("census", "Stationary points and global minimizers");
    census_cmd->add_option("--beta", beta, "Inverse temperature")->required();
    auto* alpha_opt = census_cmd->add_option("--alpha", alpha, "Field a1,a2,a3")->delimiter(',');
    census_cmd->add_option("--uv", uv, "Field as u,v = log(a1/a3),log(a2/a3)")->delimiter(',')->excludes(alpha_opt);

    auto* critical_cmd = app.add_subcommand("critical", "Distinguished inverse temperatures");

    double step = 1e-2;
    auto* maxwell_cmd = app.add_subcommand("maxwell", "Coexistence segments, triple points and curves");
    maxwell_cmd->add_option("--beta", beta, "Inverse temperature")->required();
    maxwell_cmd->add_option("--step", step, "Continuation step bound")->check(CLI::Range(1e-5, 0.1));
    maxwell_cmd->add_option("--chart", chart_name, "Field chart for svg")->check(CLI::IsMember({"pq", "uv", "xy"}));
    maxwell_cmd->add_option("--extent", half_width, "Half-width of the plotted square (default: fit the cusps)")
        ->check(CLI::PositiveNumber);

    auto* potential_cmd = app.add_subcommand("potential", "Free energy over the spin triangle");
    potential_cmd->add_option("--beta", beta, "Inverse temperature")->required();
    auto* palpha = potential_cmd->add_option("--alpha", alpha, "Field a1,a2,a3")->delimiter(',');
    potential_cmd->add_option("--uv", uv, "Field as u,v")->delimiter(',')->excludes(palpha);
    potential_cmd->add_option("--grid", grid, "Barycentric lattice density")->check(CLI::Range(4, 4096));

    CLI11_PARSE(app, argc, argv);

    try {
        if (!(beta > 0.0) && !critical_cmd->parsed() && !surface_cmd->parsed()) {
            throw DomainError("beta must be positive");
        }
        const ToleranceConfig tol = common.tolerances();
        if (slice_cmd->parsed()) {
            require_format(common, {"csv", "json", "svg"});
            const auto curves = slice(beta, samples);
            const plot::Chart chart = parse_chart(chart_name);
            const plot::Extent extent = half_width > 0.0 ? plot::Extent{-half_width, half_width, -half_width, half_width}
                                                         : plot::slice_extent(beta);
            std::optional<plot::CellMap> cells;
            const auto lines = plot::slice_polylines(curves, chart, extent);
            if (label) cells = plot::label_cells(beta, lines, chart, extent, tol, common.seed_grid);
            std::vector<std::string> notes;
            if (curves.empty()) notes.push_back("no degenerate stationary points for beta <= 2: empty slice");
            if (cells) {
                for (const auto& c : cells->cells) {
                    std::ostringstream s;
                    s << "cell," << c.id << ',' << io::format_double(c.probe ? c.probe->x : c.centroid.x) << ','
                      << io::format_double(c.probe ? c.probe->y : c.centroid.y) << ','
                      << (c.minima ? std::to_string(*c.minima) : std::string("unresolved"));
                    notes.push_back(s.str());
                }
            }
            if (common.format == "svg") {
                plot::PlotSpec spec;
                spec.chart = chart;
                spec.extent = extent;
                spec.title = "bifurcation set, beta = " + io::format_double(beta);
                Sink sink(common.out);
                sink.stream() << plot::render_svg(spec, lines, {}, cells ? plot::cell_labels(*cells)
                                                                          : std::vector<plot::CellLabel>{});
            } else if (common.format == "json" && cells) {
                auto j = io::to_json(io::slice_table(curves));
                for (const auto& c : cells->cells) {
                    const plot::Point2 at = c.probe ? *c.probe : c.centroid;
                    j.push_back({{"kind", "cell_label"}, {"schema_version", io::kSchemaVersion}, {"cell", c.id},
                                 {"x", at.x}, {"y", at.y},
                                 {"minima", c.minima ? nlohmann::json(*c.minima) : nlohmann::json(nullptr)}});
                }
                Sink sink(common.out);
                sink.stream() << j.dump(1) << '\n';
            } else {
                emit(common, io::slice_table(curves), notes);
            }
            for (const auto& n : notes) {
                if (n.rfind("cell", 0) != 0) std::cerr << n << '\n';
            }
        } else if (surface_cmd->parsed()) {
            require_format(common, {"csv", "json", "obj"});
            const auto [plus, minus] = surface_patches(grid);
            if (common.format == "obj") {
                Sink sink(common.out);
                io::write_surface_obj(sink.stream(), plus, minus, beta_max);
            } else {
                emit(common, io::surface_table(plus, minus, beta_max),
                     {"skipped lattice points: " + std::to_string(plus.skipped) + " (+), " +
                      std::to_string(minus.skipped) + " (-)"});
            }
        } else if (census_cmd->parsed()) {
            require_format(common, {"csv", "json"});
            const auto c = census(ModelParams(beta, parse_field(alpha, uv)), tol, common.seed_grid);
            std::vector<std::string> notes;
            if (c.degenerate) notes.push_back("warning: degenerate stationary point, parameters on the bifurcation set");
            emit(common, io::census_table(c), notes);
            for (const auto& n : notes) std::cerr << n << '\n';
        } else if (critical_cmd->parsed()) {
            require_format(common, {"csv", "json"});
            emit(common, io::critical_table(all_critical_temps()));
        } else if (maxwell_cmd->parsed()) {
            require_format(common, {"csv", "json", "svg"});
            const auto d = io::maxwell_diagram(beta, step);
            if (common.format == "svg") {
                const plot::Chart chart = parse_chart(chart_name);
                plot::PlotSpec spec;
                spec.chart = chart;
                spec.extent = half_width > 0.0 ? plot::Extent{-half_width, half_width, -half_width, half_width}
                                               : plot::slice_extent(beta);
                spec.title = "Maxwell set (dashed) and bifurcation set, beta = " + io::format_double(beta);
                Sink sink(common.out);
                sink.stream() << plot::render_svg(spec, plot::slice_polylines(slice(beta), chart, spec.extent),
                                                  plot::maxwell_polylines(d, chart, spec.extent), {});
            } else {
                std::vector<std::string> notes;
                for (const auto& c : d.curves) {
                    notes.push_back("curve end: " + std::string(to_string(c.end)));
                }
                emit(common, io::maxwell_table(d), notes);
            }
            for (const auto& c : d.curves) {
                if (c.end == CurveEnd::Truncated) {
                    std::cerr << "coexistence curve truncated: corrector failed at the minimum step\n";
                    return kExitNumerical;
                }
            }
        } else if (potential_cmd->parsed()) {
            require_format(common, {"csv", "json", "svg"});
            const ModelParams params(beta, parse_field(alpha, uv));
            const auto c = census(params, tol, common.seed_grid);
            if (common.format == "svg") {
                Sink sink(common.out);
                sink.stream() << plot::render_potential_svg(params, grid, c.points,
                                                            "free energy, beta = " + io::format_double(beta));
            } else {
                emit(common, io::potential_table(params, io::potential_grid(params, grid)));
            }
            std::cerr.precision(17);
            for (const auto& p : c.points) {
                if (p.kind != StationaryKind::Minimum) continue;
                std::cerr << "minimum " << describe(p.nu) << " f = " << p.value << '\n';
            }
        }
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
