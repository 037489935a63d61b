#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace affcov {

using Edge = std::pair<int, int>;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite simple undirected graph on vertices 0..n-1. Edges are stored as
/// sorted pairs (u < v) in lexicographic order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const;
  bool has_edge(int u, int v) const;
  /// Index of edge {u,v} in edges(), or -1.
  int edge_index(int u, int v) const;

  /// Adjacency bitmasks, only for n <= 64.
  std::vector<std::uint64_t> adjacency_masks() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

enum class GraphFormat { graph6, edge_list };

Graph parse_graph(std::string_view text, GraphFormat format);
std::string to_graph6(const Graph& g);
std::string to_edge_list(const Graph& g);

enum class FamilyKind {
  complete,
  complete_bipartite,
  cycle,
  path,
  nested_triangles,
  nested_squares,
  c4_prism_stack,
  complete_binary_tree,
  caterpillar,
  balanced_multipartite,
};

struct FamilySpec {
  FamilyKind kind;
  std::vector<int> params;
};

/// Vertex numbering per family:
///   complete_bipartite(p,q): side A = 0..p-1, side B = p..p+q-1.
///   cycle/path: consecutive indices adjacent.
///   nested_triangles(k), c4_prism_stack(k): ring-major, vertex j*s+c is
///     corner c of ring j (s = 3 or 4).
///   nested_squares(k): ring-major as above; ring j is joined to ring j+1
///     at corners 0,2 when j is even and at corners 1,3 when j is odd.
///   complete_binary_tree(h): heap order, children of v are 2v+1, 2v+2.
///   caterpillar(s, l_0..l_{s-1}): spine 0..s-1, then leaves spine by spine.
///   balanced_multipartite(r,n): class-major; the first n mod r classes get
///     ceil(n/r) vertices.
Graph build_family(const FamilySpec& spec);

/// Parses "kind:p1,p2,..." (e.g. "complete:6", "c4xp:8") and the named
/// graphs petersen, octahedron, icosahedron, cube and lva3_planar9.
Graph family_from_string(std::string_view text);
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(FamilyKind k);

/// Vertex (u,v) maps to u*h.n()+v.
Graph cartesian_product(const Graph& g, const Graph& h);

struct EssentialVertices {
  std::vector<int> vertices;
  int es = 0;
};

/// Vertices of degree >= 3 or lying on a triangle.
EssentialVertices essential_vertices(const Graph& g);

bool is_linear_forest(const Graph& g, const std::vector<int>& part);
bool is_independent(const Graph& g, const std::vector<int>& part);

/// Induced subgraph; vertex i of the result is part[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& part);
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
bool is_complete(const Graph& g);
/// Returns (p,q) with p <= q when g is a complete bipartite graph K_{p,q}
/// with p >= 1.
std::optional<std::pair<int, int>> complete_bipartite_sides(const Graph& g);
int degeneracy(const Graph& g);
int count_triangles_at(const Graph& g, int v);

/// Connected graph on n vertices: random spanning tree plus each further
/// pair with probability p. Deterministic for a given seed.
Graph random_connected_graph(int n, double p, std::uint64_t seed);

/// Uniform integer in [0, bound) from a 64-bit engine, independent of the
/// standard library's distribution implementation.
std::uint64_t uniform_below(std::uint64_t word, std::uint64_t bound);

}  // namespace affcov
