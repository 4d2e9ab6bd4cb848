#include "potts/export.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace potts::io {

namespace {

constexpr std::string_view kHeaderPrefix = "# potts-landscape v";

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct KindName {
    RecordKind kind;
    std::string_view name;
};

constexpr KindName kKindNames[] = {
    {RecordKind::SlicePoint, "slice_point"},   {RecordKind::SurfacePoint, "surface_point"},
    {RecordKind::CriticalTemps, "critical_temps"}, {RecordKind::Census, "census"},
    {RecordKind::MaxwellPoint, "maxwell_point"}, {RecordKind::PotentialGrid, "potential_grid"},
};

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream ss(line);
    while (std::getline(ss, cur, sep)) out.push_back(cur);
    return out;
}

double parse_double(const std::string& s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw std::runtime_error("read_csv: bad number '" + s + "'");
    return v;
}

template <typename Tag> void push3(std::vector<double>& row, const SimplexPoint<Tag>& s) {
    row.insert(row.end(), {s[0], s[1], s[2]});
}

template <typename Point> Point point_at(const Table& t, const std::vector<double>& row, const std::string& prefix) {
    return Point(row[t.column(prefix + "1")], row[t.column(prefix + "2")], row[t.column(prefix + "3")]);
}

CoexistencePoint permuted(const Permutation& p, const CoexistencePoint& c) {
    CoexistencePoint out{c.beta, apply_permutation(p, c.alpha), {}, c.depth};
    for (const auto& m : c.minimizers) out.minimizers.push_back(apply_permutation(p, m));
    return out;
}

} // namespace

std::string_view to_string(RecordKind kind) {
    for (const auto& k : kKindNames) {
        if (k.kind == kind) return k.name;
    }
    return "unknown";
}

std::optional<RecordKind> record_kind_from_string(std::string_view s) {
    for (const auto& k : kKindNames) {
        if (k.name == s) return k.kind;
    }
    return std::nullopt;
}

std::size_t Table::column(std::string_view name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) return i;
    }
    throw std::out_of_range("Table: no column " + std::string(name));
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const Table& t) {
    out << kHeaderPrefix << kSchemaVersion << ' ' << to_string(t.kind) << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
        out << '\n';
    }
}

Table read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind(kHeaderPrefix, 0) != 0) {
        throw std::runtime_error("read_csv: missing potts-landscape header");
    }
    std::istringstream header(line.substr(kHeaderPrefix.size()));
    int version = 0;
    std::string kind_name;
    header >> version >> kind_name;
    if (version != kSchemaVersion) throw std::runtime_error("read_csv: unsupported schema version");
    const auto kind = record_kind_from_string(kind_name);
    if (!kind) throw std::runtime_error("read_csv: unknown record kind " + kind_name);

    Table t{*kind, {}, {}};
    if (!std::getline(in, line)) throw std::runtime_error("read_csv: missing column line");
    t.columns = split(line, ',');
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto cells = split(line, ',');
        if (cells.size() != t.columns.size()) throw std::runtime_error("read_csv: row width mismatch");
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& c : cells) row.push_back(parse_double(c));
        t.rows.push_back(std::move(row));
    }
    return t;
}

nlohmann::json to_json(const Table& t) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json obj;
        obj["kind"] = to_string(t.kind);
        obj["schema_version"] = kSchemaVersion;
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
            const double v = row[i];
            if (!std::isfinite(v)) {
                obj[t.columns[i]] = nullptr;
            } else if (v == std::trunc(v) && std::abs(v) < 1e15) {
                obj[t.columns[i]] = static_cast<long long>(v);
            } else {
                obj[t.columns[i]] = v;
            }
        }
        arr.push_back(std::move(obj));
    }
    return arr;
}

int stationary_kind_code(StationaryKind k) { return static_cast<int>(k); }

int permutation_index(const Permutation& p) {
    const auto all = Permutation::all();
    for (int i = 0; i < 6; ++i) {
        if (all[i] == p) return i;
    }
    return -1;
}

Table slice_table(const std::vector<SliceCurve>& curves) {
    Table t{RecordKind::SlicePoint,
            {"beta", "branch", "interval", "x_param", "nu1", "nu2", "nu3", "alpha1", "alpha2", "alpha3", "p", "q"},
            {}};
    for (const auto& c : curves) {
        for (const auto& s : c.samples) {
            std::vector<double> row{c.beta, double(permutation_index(c.branch)), double(c.interval), s.x_param};
            push3(row, s.nu);
            push3(row, s.alpha);
            const CoordPQ pq = to_pq(s.alpha);
            row.insert(row.end(), {pq.p, pq.q});
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

std::vector<SliceCurve> slice_from_table(const Table& t) {
    if (t.kind != RecordKind::SlicePoint) throw std::runtime_error("slice_from_table: not a slice table");
    std::vector<SliceCurve> curves;
    const auto all = Permutation::all();
    const std::size_t cb = t.column("beta"), cbr = t.column("branch"), ci = t.column("interval"),
                      cx = t.column("x_param");
    for (const auto& row : t.rows) {
        const double beta = row[cb];
        const int branch = static_cast<int>(row[cbr]);
        const int interval = static_cast<int>(row[ci]);
        if (branch < 0 || branch >= 6) throw std::runtime_error("slice_from_table: bad branch index");
        if (curves.empty() || curves.back().beta != beta || permutation_index(curves.back().branch) != branch ||
            curves.back().interval != interval) {
            curves.push_back({beta, all[branch], interval, {}});
        }
        const auto nu = point_at<SpinDistribution>(t, row, "nu");
        if (std::abs(degeneracy_lhs(beta, nu)) > 1e-9) {
            throw DomainError("slice_from_table: point violates the degeneracy condition");
        }
        curves.back().samples.push_back({row[cx], nu, point_at<AprioriMeasure>(t, row, "alpha")});
    }
    return curves;
}

Table surface_table(const SurfacePatch& plus, const SurfacePatch& minus, double beta_max) {
    Table t{RecordKind::SurfacePoint,
            {"sign", "i", "j", "nu1", "nu2", "nu3", "beta", "alpha1", "alpha2", "alpha3", "p", "q"},
            {}};
    for (const SurfacePatch* patch : {&plus, &minus}) {
        for (const auto& s : patch->samples) {
            if (s.beta > beta_max) continue;
            std::vector<double> row{double(patch->sign), double(s.i), double(s.j)};
            push3(row, s.nu);
            row.push_back(s.beta);
            push3(row, s.alpha);
            const CoordPQ pq = to_pq(s.alpha);
            row.insert(row.end(), {pq.p, pq.q});
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

void write_surface_obj(std::ostream& out, const SurfacePatch& plus, const SurfacePatch& minus, double beta_max) {
    out << "# potts-landscape v" << kSchemaVersion << " surface mesh (p, q, beta)\n";
    std::size_t base = 1;
    for (const SurfacePatch* patch : {&plus, &minus}) {
        const int n = patch->grid_density;
        std::vector<long> index(std::size_t(n + 1) * (n + 1), -1);
        long count = 0;
        out << "g sheet" << (patch->sign > 0 ? "_plus" : "_minus") << '\n';
        for (const auto& s : patch->samples) {
            if (s.beta > beta_max) continue;
            const CoordPQ pq = to_pq(s.alpha);
            out << "v " << format_double(pq.p) << ' ' << format_double(pq.q) << ' ' << format_double(s.beta) << '\n';
            index[std::size_t(s.i) * (n + 1) + s.j] = count++;
        }
        const auto id = [&](int i, int j) { return index[std::size_t(i) * (n + 1) + j]; };
        const auto face = [&](long a, long b, long c) {
            if (a < 0 || b < 0 || c < 0) return;
            out << "f " << base + a << ' ' << base + b << ' ' << base + c << '\n';
        };
        for (int i = 1; i < n; ++i) {
            for (int j = 1; i + j < n; ++j) {
                if (i + j + 1 < n) face(id(i, j), id(i + 1, j), id(i, j + 1));
                if (i + j + 2 < n) face(id(i + 1, j), id(i + 1, j + 1), id(i, j + 1));
            }
        }
        base += count;
    }
}

Table critical_table(const CriticalTemps& c) {
    return {RecordKind::CriticalTemps,
            {"butterfly", "cross", "ellis_wang", "touch", "umbilic"},
            {{c.butterfly, c.cross, c.ellis_wang, c.touch, c.umbilic}}};
}

Table census_table(const MinimaCensus& c) {
    Table t{RecordKind::Census,
            {"beta", "alpha1", "alpha2", "alpha3", "nu1", "nu2", "nu3", "kind", "eig1", "eig2", "value", "global",
             "n_local_minima", "degenerate"},
            {}};
    for (const auto& p : c.points) {
        const bool global = std::any_of(c.global_minimizers.begin(), c.global_minimizers.end(),
                                        [&](const StationaryPoint& g) { return g.nu == p.nu; });
        std::vector<double> row{c.params.beta};
        push3(row, c.params.alpha);
        push3(row, p.nu);
        row.insert(row.end(), {double(stationary_kind_code(p.kind)), p.hess_eigenvalues[0], p.hess_eigenvalues[1],
                               p.value, global ? 1.0 : 0.0, double(c.n_local_minima), c.degenerate ? 1.0 : 0.0});
        t.rows.push_back(std::move(row));
    }
    return t;
}

MaxwellDiagram maxwell_diagram(double beta, double step) {
    MaxwellDiagram d{beta, {}, {}, {}};
    if (!(beta > 2.0)) return d;
    const double ellis_wang = 4.0 * std::numbers::ln2;
    const auto all = Permutation::all();
    if (beta > 18.0 / 7.0 && beta < ellis_wang) {
        CoexistenceCurve curve = coexistence_curve(beta, step);
        const CoexistencePoint& tp = curve.origin;
        for (int k = 0; k < 3; ++k) d.triple_points.push_back(permuted(all[k], tp));
        for (const auto& s : rotation_orbit({{0.0, -0.5}, {0.0, to_xy(tp.alpha).y}})) d.segments.push_back(s);
        for (const auto& p : all) {
            CoexistenceCurve img{beta, permuted(p, curve.origin), {}, curve.end};
            for (const auto& c : curve.points) img.points.push_back(permuted(p, c));
            d.curves.push_back(std::move(img));
        }
    } else if (const auto seg = symmetric_segment(beta)) {
        for (const auto& s : rotation_orbit(*seg)) d.segments.push_back(s);
    }
    return d;
}

Table maxwell_table(const MaxwellDiagram& d) {
    Table t{RecordKind::MaxwellPoint,
            {"beta", "record", "image", "index", "x", "y", "alpha1", "alpha2", "alpha3", "p", "q", "depth",
             "n_minimizers", "m1_1", "m1_2", "m1_3", "m2_1", "m2_2", "m2_3", "m3_1", "m3_2", "m3_3"},
            {}};
    const auto point_row = [&](int record, int image, int index, const CoexistencePoint& c) {
        const CoordXY xy = to_xy(c.alpha);
        const CoordPQ pq = to_pq(c.alpha);
        std::vector<double> row{d.beta, double(record), double(image), double(index), xy.x, xy.y};
        push3(row, c.alpha);
        row.insert(row.end(), {pq.p, pq.q, c.depth, double(c.minimizers.size())});
        for (std::size_t m = 0; m < 3; ++m) {
            if (m < c.minimizers.size()) {
                push3(row, c.minimizers[m]);
            } else {
                row.insert(row.end(), {kNaN, kNaN, kNaN});
            }
        }
        t.rows.push_back(std::move(row));
    };
    for (std::size_t k = 0; k < d.segments.size(); ++k) {
        int index = 0;
        for (const CoordXY& e : {d.segments[k].a, d.segments[k].b}) {
            std::vector<double> row{d.beta, 0.0, double(k), double(index++), e.x, e.y};
            row.resize(t.columns.size(), kNaN);
            t.rows.push_back(std::move(row));
        }
    }
    for (std::size_t k = 0; k < d.triple_points.size(); ++k) point_row(1, int(k), 0, d.triple_points[k]);
    for (std::size_t k = 0; k < d.curves.size(); ++k) {
        for (std::size_t i = 0; i < d.curves[k].points.size(); ++i) point_row(2, int(k), int(i), d.curves[k].points[i]);
    }
    return t;
}

std::vector<std::vector<CoexistencePoint>> maxwell_curves_from_table(const Table& t) {
    if (t.kind != RecordKind::MaxwellPoint) throw std::runtime_error("maxwell_curves_from_table: not a maxwell table");
    std::vector<std::vector<CoexistencePoint>> curves;
    int current = -1;
    for (const auto& row : t.rows) {
        if (row[t.column("record")] != 2.0) continue;
        const int image = static_cast<int>(row[t.column("image")]);
        if (image != current) {
            curves.emplace_back();
            current = image;
        }
        CoexistencePoint c{row[t.column("beta")], point_at<AprioriMeasure>(t, row, "alpha"), {}, row[t.column("depth")]};
        const int n = static_cast<int>(row[t.column("n_minimizers")]);
        for (int m = 1; m <= n; ++m) {
            c.minimizers.push_back(point_at<SpinDistribution>(t, row, "m" + std::to_string(m) + "_"));
        }
        curves.back().push_back(std::move(c));
    }
    return curves;
}

std::vector<PotentialSample> potential_grid(const ModelParams& params, int grid_density) {
    if (grid_density < 4) throw DomainError("potential_grid: grid density must be at least 4");
    std::vector<PotentialSample> out;
    const int n = grid_density;
    for (int i = 1; i < n; ++i) {
        for (int j = 1; i + j < n; ++j) {
            const SpinDistribution nu(double(i) / n, double(j) / n, double(n - i - j) / n);
            out.push_back({i, j, nu, free_energy(params, nu)});
        }
    }
    return out;
}

Table potential_table(const ModelParams& params, const std::vector<PotentialSample>& grid) {
    Table t{RecordKind::PotentialGrid, {"beta", "i", "j", "nu1", "nu2", "nu3", "x", "y", "f"}, {}};
    for (const auto& s : grid) {
        const CoordXY xy = to_xy(s.nu);
        std::vector<double> row{params.beta, double(s.i), double(s.j)};
        push3(row, s.nu);
        row.insert(row.end(), {xy.x, xy.y, s.value});
        t.rows.push_back(std::move(row));
    }
    return t;
}

} // namespace potts::io
