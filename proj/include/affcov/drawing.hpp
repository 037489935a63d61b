#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "affcov/geometry.hpp"
#include "affcov/graph.hpp"

namespace affcov {

struct Drawing {
  Graph graph;
  std::vector<QPoint> points;
  std::string meta;

  int dim() const { return points.empty() ? 2 : points[0].dim(); }
};

struct Violation {
  enum class Kind { bad_input, coincident_points, vertex_on_edge, edge_crossing };
  Kind kind = Kind::bad_input;
  // coincident_points: two vertices; vertex_on_edge: vertex, edge index;
  // edge_crossing: two edge indices.
  int a = -1;
  int b = -1;
  std::string detail;

  std::string describe() const;
};

struct VerifyResult;
VerifyResult verify_crossing_free(Drawing d);

/// A drawing that passed verify_crossing_free. There is no other way to
/// obtain one.
class VerifiedDrawing {
 public:
  const Drawing& drawing() const { return d_; }
  const Graph& graph() const { return d_.graph; }
  const std::vector<QPoint>& points() const { return d_.points; }
  int dim() const { return d_.dim(); }

 private:
  friend VerifyResult verify_crossing_free(Drawing d);
  explicit VerifiedDrawing(Drawing d) : d_(std::move(d)) {}
  Drawing d_;
};

struct VerifyResult {
  std::optional<VerifiedDrawing> drawing;
  std::optional<Violation> violation;

  bool ok() const { return drawing.has_value(); }
  /// The verified drawing; throws with the violation text otherwise.
  const VerifiedDrawing& value() const;
};

/// Checks, in this order: point count and dimension, pairwise distinct
/// points, no vertex in the interior of an edge (vertices ascending, edges
/// ascending), then all edge pairs in lexicographic order. The first
/// violation found is reported.
VerifyResult verify_crossing_free(Drawing d);

enum class CoverKind {
  lines_for_edges,
  lines_for_vertices,
  planes_for_edges,
  planes_for_vertices,
  parallel_lines,
};

const char* to_string(CoverKind k);
CoverKind cover_kind_from_string(const std::string& s);
bool covers_edges(CoverKind k);
bool uses_planes(CoverKind k);

/// Objects are lines or planes depending on kind; assignment maps each edge
/// (edge kinds) or vertex (vertex kinds) to an object index.
struct CoverWitness {
  CoverKind kind = CoverKind::lines_for_edges;
  std::vector<CanonLine> lines;
  std::vector<CanonPlane> planes;
  std::vector<int> assignment;

  int size() const {
    return static_cast<int>(uses_planes(kind) ? planes.size() : lines.size());
  }
};

/// Empty on success, otherwise a description of the first problem.
std::optional<std::string> validate_witness(const Drawing& d, const CoverWitness& w);

bool planes_parallel(const std::vector<CanonPlane>& planes);

struct CoverCount {
  int count = 0;
  CoverWitness witness;
  bool exact = true;
};

struct SetCoverResult {
  std::vector<int> chosen;  // ascending set indices
  bool exact = true;
  std::uint64_t nodes = 0;
};

/// Minimum set cover of a universe of at most 64 elements by branch and
/// bound. Falls back to greedy (exact = false) past the node budget or for
/// larger universes. Throws if the sets do not cover the universe.
SetCoverResult set_cover(int universe, const std::vector<std::vector<int>>& sets,
                         std::uint64_t node_budget = 2'000'000);

CoverCount edge_line_count(const VerifiedDrawing& d);
CoverCount min_vertex_line_cover(const VerifiedDrawing& d,
                                 std::uint64_t node_budget = 2'000'000);
CoverCount min_edge_plane_cover(const VerifiedDrawing& d,
                                std::uint64_t node_budget = 2'000'000);
/// Fewest parallel lines carrying all vertices. A best direction is either
/// spanned by two vertices or arbitrary (every line a singleton), so the
/// search over pair directions is exact.
CoverCount min_parallel_line_cover(const VerifiedDrawing& d);

struct SegmentSlopeCount {
  int segments = 0;
  int slopes = 0;
};

SegmentSlopeCount segment_slope_count(const VerifiedDrawing& d);

struct StructuralReport {
  bool ok = true;
  std::vector<std::string> problems;
};

StructuralReport kn_structural_checks(const VerifiedDrawing& d, const CoverWitness& w);

/// Checks on the edge line count of a drawing. The first is
/// r > (1+sqrt(1+8es))/2 evaluated exactly; the second r^2 > m^2/n - m when
/// m >= n >= 1 (vacuous otherwise).
bool ess_a_holds(int lines, int es);
bool ess_b_holds(int lines, int n, int m);

}  // namespace affcov
