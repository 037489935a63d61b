#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "affcov/drawing.hpp"
#include "affcov/planar.hpp"
#include "affcov/solvers.hpp"

namespace affcov {

/// A construction whose drawing failed verification or whose witness did
/// not validate.
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(const std::string& what, std::optional<Violation> v = std::nullopt)
      : std::runtime_error(what), violation(std::move(v)) {}
  std::optional<Violation> violation;
};

struct ConstructionResult {
  VerifiedDrawing drawing;
  CoverWitness witness;
  int claimed_bound = 0;
  /// Number of integer grid values spanned per axis (ceil of the extent,
  /// plus one).
  std::vector<Integer> box;
  /// False when the construction rests on a fallback partition.
  bool optimal = true;
  int retries = 0;
  std::uint64_t seed = 0;
};

/// Assembles a result: verifies the drawing, validates the witness and
/// checks witness size against the claimed bound. Throws ConstructionError.
ConstructionResult finish_construction(Drawing d, CoverWitness w, int claimed_bound,
                                       bool optimal = true);

/// Witness of `kind` (lines_for_vertices or parallel_lines) with one line
/// per group. Singleton groups get the line in `direction` when given, else
/// the canonical singleton line.
CoverWitness vertex_line_witness(const std::vector<QPoint>& points,
                                 const std::vector<std::vector<int>>& groups,
                                 CoverKind kind = CoverKind::lines_for_vertices,
                                 const std::vector<Rational>& direction = {});

/// Smallest prime >= max(2, 2r-1).
int pach_prime(int r);

/// K^r(n) with class i on the line (i,0,0)+t(0,1,i). When join_classes is
/// set, consecutive vertices of a class are also joined.
ConstructionResult pach_multipartite(int r, int n, bool join_classes = true);

/// Vertices on lva(G) lines in 3D.
ConstructionResult pi13_drawing(const Graph& g, const Budget& b = {});

struct Pi23Options {
  std::uint64_t seed = 1;
  int retry_cap = 64;
};

/// Vertices on vt(G) parallel planes z = i.
ConstructionResult pi23_drawing(const Graph& g, const Pi23Options& opt = {},
                                const Budget& b = {});

ConstructionResult moment_curve_kn(int n);
ConstructionResult kpq_plane_book(int p, int q);
/// Coordinates of u1..u8 used by kn_small_plane_cover.
std::vector<QPoint> kn_small_points();
ConstructionResult kn_small_plane_cover(int n);
/// Table upper value for the edge plane cover of K_n, 4 <= n <= 8.
int kn_table_upper(int n);
/// K_n on the moment curve with one plane per triangle of a minimum
/// triangle cover of K_n.
ConstructionResult kn_triangle_planes(int n, const Budget& b = {});
ConstructionResult spiral_two_lines(const Graph& g, const TrackAssignment& tracks);
ConstructionResult parallel_kpq_lines(int p, int q);

/// m(2)=2, m(3)=4, m(h+2)=2m(h)+4; m(0)=0 and m(1)=1 for the small cases.
long binary_tree_m(int h);
ConstructionResult binary_tree_grid(int h);
ConstructionResult k2q_optimal(int q);

enum class PrismBase { c4, c3 };

struct PrismStats {
  int columns = 0;
  int height = 0;
  int grid = 0;
};

ConstructionResult prism_stack_3d(int k, PrismBase base, PrismStats* stats = nullptr);
ConstructionResult nested_squares_two_lines(int k);

/// Targets accepted by build_target.
const std::vector<std::string>& target_names();
/// Runs the named construction on g. Targets tied to a family need g in
/// that family's own numbering. Throws DomainError when inapplicable.
ConstructionResult build_target(const Graph& g, const std::string& target, std::uint64_t seed = 1,
                                const Budget& b = {});

}  // namespace affcov
