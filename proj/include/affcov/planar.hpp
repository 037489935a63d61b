#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "affcov/drawing.hpp"
#include "affcov/graph.hpp"

namespace affcov {

struct PlaneEmbedding {
  /// rotation[v] lists the neighbours of v in cyclic order.
  std::vector<std::vector<int>> rotation;
  /// Each face is its directed boundary walk as a vertex sequence.
  std::vector<std::vector<int>> faces;
  int outer_face = -1;
};

std::optional<PlaneEmbedding> planarity_test(const Graph& g);
bool is_planar(const Graph& g);

/// Empty when the embedding satisfies Euler's formula per component and
/// every directed edge lies on exactly one face.
std::optional<std::string> check_embedding(const Graph& g, const PlaneEmbedding& e);

/// Straight-line drawing on the [0,2n-4] x [0,n-2] grid by the shift
/// method. Needs a connected planar graph.
Drawing grid_drawing(const Graph& g);
/// Same, for possibly disconnected planar graphs: components are joined by
/// temporary edges that are dropped from the result.
Drawing grid_drawing_any(const Graph& g);

struct DualCircumference {
  int lower_bound_pi12 = 0;
  int c_dual = 0;
  int faces = 0;
  bool exact = true;
};

DualCircumference dual_circumference_bound(const Graph& g,
                                           std::uint64_t node_budget = 50'000'000);

/// Maximal planar graphs on n vertices up to isomorphism, 3 <= n <= 10,
/// each in a canonical labelling.
std::vector<Graph> planar_triangulations(int n);

struct TrackAssignment {
  std::vector<int> track_of;
  /// Position of the vertex inside its track, 0-based.
  std::vector<int> order;

  int tracks() const;
};

TrackAssignment tree_tracks(const Graph& g, int root);
/// Empty when every edge joins equal or consecutive tracks.
std::optional<std::string> check_tracks(const Graph& g, const TrackAssignment& t);

}  // namespace affcov
