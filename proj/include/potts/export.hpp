#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "potts/bifurcation.hpp"
#include "potts/critical.hpp"
#include "potts/maxwell.hpp"
#include "potts/stationary.hpp"

namespace potts::io {

inline constexpr int kSchemaVersion = 1;

enum class RecordKind { SlicePoint, SurfacePoint, CriticalTemps, Census, MaxwellPoint, PotentialGrid };

std::string_view to_string(RecordKind kind);
std::optional<RecordKind> record_kind_from_string(std::string_view s);

/// Rows of named numeric fields sharing one record kind. Integers are stored
/// as doubles and printed without a fractional part.
struct Table {
    RecordKind kind;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::size_t column(std::string_view name) const;   // throws std::out_of_range
};

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);

/// `# potts-landscape v1 <kind>`, a column header line, then one line per row.
void write_csv(std::ostream& out, const Table& t);
Table read_csv(std::istream& in);

/// Array of objects with "kind", "schema_version" and one member per column.
/// Non-finite values become null.
nlohmann::json to_json(const Table& t);

// Column codes used in the tables.
int stationary_kind_code(StationaryKind k);   // minimum 0, saddle 1, maximum 2, degenerate 3
int permutation_index(const Permutation& p);  // position in Permutation::all()

Table slice_table(const std::vector<SliceCurve>& curves);
/// Rebuilds the curves; throws DomainError if a point violates the
/// degeneracy condition by more than 1e-9.
std::vector<SliceCurve> slice_from_table(const Table& t);

Table surface_table(const SurfacePatch& plus, const SurfacePatch& minus, double beta_max);

/// Triangulated mesh of both sheets with vertices (p, q, beta), one OBJ
/// group per sheet; triangles with a vertex above beta_max are dropped.
void write_surface_obj(std::ostream& out, const SurfacePatch& plus, const SurfacePatch& minus, double beta_max);

Table critical_table(const CriticalTemps& t);

Table census_table(const MinimaCensus& c);

/// Maxwell set at one beta with all S3 images: two-phase segments, triple
/// points and coexistence curves.
struct MaxwellDiagram {
    double beta;
    std::vector<Segment> segments;
    std::vector<CoexistencePoint> triple_points;
    std::vector<CoexistenceCurve> curves;
};

MaxwellDiagram maxwell_diagram(double beta, double step = 1e-2);

/// record column: 0 segment endpoint, 1 triple point, 2 curve point.
Table maxwell_table(const MaxwellDiagram& d);
/// Curve points of a maxwell table, grouped by (image) curve.
std::vector<std::vector<CoexistencePoint>> maxwell_curves_from_table(const Table& t);

struct PotentialSample {
    int i, j;
    SpinDistribution nu;
    double value;
};

/// Free energy on the interior points of a barycentric lattice.
std::vector<PotentialSample> potential_grid(const ModelParams& params, int grid_density);
Table potential_table(const ModelParams& params, const std::vector<PotentialSample>& grid);

} // namespace potts::io
