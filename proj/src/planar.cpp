#include "affcov/planar.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <map>
#include <queue>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/chrobak_payne_drawing.hpp>
#include <boost/graph/make_biconnected_planar.hpp>
#include <boost/graph/make_connected.hpp>
#include <boost/graph/make_maximal_planar.hpp>
#include <boost/graph/planar_canonical_ordering.hpp>

namespace affcov {

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, int>>;
using BEdge = boost::graph_traits<BGraph>::edge_descriptor;
using BEmbedding = std::vector<std::vector<BEdge>>;

BGraph to_boost(const Graph& g) {
  BGraph b(static_cast<std::size_t>(g.n()));
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, b);
  return b;
}

void reindex_edges(BGraph& b) {
  auto idx = boost::get(boost::edge_index, b);
  int k = 0;
  boost::graph_traits<BGraph>::edge_iterator ei, ee;
  for (boost::tie(ei, ee) = boost::edges(b); ei != ee; ++ei) boost::put(idx, *ei, k++);
}

bool embed(BGraph& b, BEmbedding& emb) {
  reindex_edges(b);
  emb.assign(boost::num_vertices(b), {});
  return boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = b,
                                             boost::boyer_myrvold_params::embedding = &emb[0]);
}

std::vector<std::vector<int>> trace_faces(const std::vector<std::vector<int>>& rot) {
  std::size_t n = rot.size();
  std::vector<std::map<int, int>> pos(n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t i = 0; i < rot[v].size(); ++i) pos[v][rot[v][i]] = static_cast<int>(i);
  std::vector<std::vector<char>> used(n);
  for (std::size_t v = 0; v < n; ++v) used[v].assign(rot[v].size(), 0);
  std::vector<std::vector<int>> faces;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t i = 0; i < rot[s].size(); ++i) {
      if (used[s][i]) continue;
      std::vector<int> face;
      int u = static_cast<int>(s), k = static_cast<int>(i);
      while (!used[u][k]) {
        used[u][k] = 1;
        face.push_back(u);
        int v = rot[u][k];
        const auto& rv = rot[v];
        int back = pos[v].at(u);
        k = (back + 1) % static_cast<int>(rv.size());
        u = v;
      }
      faces.push_back(face);
    }
  }
  return faces;
}

}  // namespace

std::optional<PlaneEmbedding> planarity_test(const Graph& g) {
  BGraph b = to_boost(g);
  BEmbedding emb;
  if (g.n() > 0 && !embed(b, emb)) return std::nullopt;
  PlaneEmbedding e;
  e.rotation.resize(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v)
    for (const auto& ed : emb[v]) {
      int s = static_cast<int>(boost::source(ed, b)), t = static_cast<int>(boost::target(ed, b));
      e.rotation[v].push_back(s == v ? t : s);
    }
  e.faces = trace_faces(e.rotation);
  for (std::size_t f = 0; f < e.faces.size(); ++f)
    if (e.outer_face < 0 || e.faces[f].size() > e.faces[e.outer_face].size())
      e.outer_face = static_cast<int>(f);
  return e;
}

bool is_planar(const Graph& g) {
  if (g.n() >= 3 && g.m() > 3 * g.n() - 6) return false;
  BGraph b = to_boost(g);
  BEmbedding emb;
  return g.n() == 0 || embed(b, emb);
}

std::optional<std::string> check_embedding(const Graph& g, const PlaneEmbedding& e) {
  if (static_cast<int>(e.rotation.size()) != g.n()) return "rotation size mismatch";
  for (int v = 0; v < g.n(); ++v) {
    auto r = e.rotation[v];
    std::sort(r.begin(), r.end());
    if (r != g.neighbors(v)) return "rotation of vertex " + std::to_string(v) + " is not its neighbourhood";
  }
  std::map<std::pair<int, int>, int> seen;
  for (const auto& f : e.faces)
    for (std::size_t i = 0; i < f.size(); ++i) ++seen[{f[i], f[(i + 1) % f.size()]}];
  if (static_cast<int>(seen.size()) != 2 * g.m()) return "faces do not use every directed edge";
  for (auto& [de, c] : seen) {
    if (c != 1) return "directed edge on more than one face";
    if (!g.has_edge(de.first, de.second)) return "face walks a non-edge";
  }
  auto comps = connected_components(g);
  std::vector<int> comp_of(static_cast<std::size_t>(g.n()));
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
  std::vector<int> faces(comps.size(), 0), edges(comps.size(), 0);
  for (const auto& f : e.faces) ++faces[comp_of[f[0]]];
  for (auto [u, v] : g.edges()) ++edges[comp_of[u]];
  for (std::size_t c = 0; c < comps.size(); ++c) {
    int f = comps[c].size() == 1 ? 1 : faces[c];
    if (static_cast<int>(comps[c].size()) - edges[c] + f != 2)
      return "Euler check fails on component " + std::to_string(c);
  }
  return std::nullopt;
}

namespace {

struct GridCoord {
  std::size_t x;
  std::size_t y;
};

Drawing shift_method(const Graph& g, bool join_components) {
  if (!is_planar(g)) throw DomainError("grid_drawing needs a planar graph");
  if (!join_components && !is_connected(g)) throw DomainError("grid_drawing needs a connected graph");
  Drawing d;
  d.graph = g;
  d.meta = "grid_drawing";
  int n = g.n();
  if (n <= 2) {
    for (int v = 0; v < n; ++v) d.points.emplace_back(Rational(v), Rational(0));
    return d;
  }
  BGraph b = to_boost(g);
  BEmbedding emb;
  embed(b, emb);
  if (join_components) {
    boost::make_connected(b);
    embed(b, emb);
  }
  boost::make_biconnected_planar(b, &emb[0]);
  embed(b, emb);
  boost::make_maximal_planar(b, &emb[0]);
  embed(b, emb);
  std::vector<boost::graph_traits<BGraph>::vertex_descriptor> ordering;
  boost::planar_canonical_ordering(b, &emb[0], std::back_inserter(ordering));
  std::vector<GridCoord> store(static_cast<std::size_t>(n));
  auto drawing = boost::make_iterator_property_map(store.begin(), boost::get(boost::vertex_index, b));
  boost::chrobak_payne_straight_line_drawing(b, emb, ordering.begin(), ordering.end(), drawing);
  for (int v = 0; v < n; ++v)
    d.points.emplace_back(Rational(static_cast<long>(store[v].x)), Rational(static_cast<long>(store[v].y)));
  return d;
}

}  // namespace

Drawing grid_drawing(const Graph& g) { return shift_method(g, false); }

Drawing grid_drawing_any(const Graph& g) { return shift_method(g, true); }

// ------------------------------------------------------ dual circumference

namespace {

struct LongestCycle {
  const std::vector<std::vector<int>>& adj;
  std::vector<char> on_path;
  int start = 0;
  int best = 0;
  int depth = 0;
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
  bool aborted = false;
  int target = 0;

  explicit LongestCycle(const std::vector<std::vector<int>>& a) : adj(a), on_path(a.size(), 0) {}

  // Vertices > start reachable from v avoiding the path, plus the path.
  int reach_bound(int v) {
    std::vector<char> seen(adj.size(), 0);
    std::vector<int> stack{v};
    seen[v] = 1;
    int count = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (y > start && !on_path[y] && !seen[y]) {
          seen[y] = 1;
          ++count;
          stack.push_back(y);
        }
    }
    return depth + count;
  }

  void dfs(int v) {
    if (aborted || best == target) return;
    if (++nodes > budget) {
      aborted = true;
      return;
    }
    for (int w : adj[v]) {
      if (w == start && depth >= 3) best = std::max(best, depth);
    }
    if (reach_bound(v) <= best) return;
    for (int w : adj[v]) {
      if (w <= start || on_path[w]) continue;
      on_path[w] = 1;
      ++depth;
      dfs(w);
      --depth;
      on_path[w] = 0;
    }
  }
};

}  // namespace

DualCircumference dual_circumference_bound(const Graph& g, std::uint64_t node_budget) {
  int n = g.n();
  if (n < 4 || g.m() != 3 * n - 6) throw DomainError("dual circumference needs a triangulation with n >= 4");
  auto emb = planarity_test(g);
  if (!emb) throw DomainError("dual circumference needs a planar graph");
  const auto& faces = emb->faces;
  std::map<std::pair<int, int>, int> face_of;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (faces[f].size() != 3) throw DomainError("not a triangulation: face of length " + std::to_string(faces[f].size()));
    for (int i = 0; i < 3; ++i) face_of[{faces[f][i], faces[f][(i + 1) % 3]}] = static_cast<int>(f);
  }
  std::vector<std::vector<int>> dual(faces.size());
  for (auto& [de, f] : face_of) dual[f].push_back(face_of.at({de.second, de.first}));
  for (auto& a : dual) std::sort(a.begin(), a.end());

  DualCircumference r;
  r.faces = static_cast<int>(faces.size());
  LongestCycle lc(dual);
  lc.budget = node_budget;
  lc.target = r.faces;
  for (int s = 0; s < r.faces && !lc.aborted && lc.best < r.faces; ++s) {
    if (r.faces - s <= lc.best) break;
    lc.start = s;
    lc.on_path[s] = 1;
    lc.depth = 1;
    lc.dfs(s);
    lc.on_path[s] = 0;
  }
  r.exact = !lc.aborted;
  r.c_dual = r.exact ? lc.best : r.faces;
  r.lower_bound_pi12 = (r.faces + r.c_dual - 1) / r.c_dual;
  return r;
}

// ------------------------------------------------------------------ tracks

int TrackAssignment::tracks() const {
  int t = 0;
  for (int x : track_of) t = std::max(t, x + 1);
  return t;
}

TrackAssignment tree_tracks(const Graph& g, int root) {
  if (!is_tree(g)) throw DomainError("tree_tracks needs a tree");
  if (root < 0 || root >= g.n()) throw DomainError("root out of range");
  TrackAssignment t;
  t.track_of.assign(static_cast<std::size_t>(g.n()), -1);
  t.order.assign(static_cast<std::size_t>(g.n()), -1);
  std::vector<int> filled;
  std::queue<int> q;
  q.push(root);
  t.track_of[root] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    int tr = t.track_of[v];
    if (static_cast<int>(filled.size()) <= tr) filled.resize(static_cast<std::size_t>(tr) + 1, 0);
    t.order[v] = filled[tr]++;
    for (int w : g.neighbors(v))
      if (t.track_of[w] < 0) {
        t.track_of[w] = tr + 1;
        q.push(w);
      }
  }
  return t;
}

std::optional<std::string> check_tracks(const Graph& g, const TrackAssignment& t) {
  if (static_cast<int>(t.track_of.size()) != g.n() || static_cast<int>(t.order.size()) != g.n())
    return "track assignment size mismatch";
  for (int v = 0; v < g.n(); ++v)
    if (t.track_of[v] < 0) return "negative track for vertex " + std::to_string(v);
  for (auto [u, v] : g.edges())
    if (std::abs(t.track_of[u] - t.track_of[v]) > 1)
      return "edge {" + std::to_string(u) + "," + std::to_string(v) + "} skips a track";
  return std::nullopt;
}

}  // namespace affcov

namespace affcov {

namespace {

using Masks = std::vector<std::uint64_t>;

bool connected_without(const Masks& adj, std::uint64_t removed) {
  int n = static_cast<int>(adj.size());
  std::uint64_t all = (n == 64 ? ~0ULL : (1ULL << n) - 1) & ~removed;
  if (!all) return true;
  std::uint64_t seen = all & -all, frontier = seen;
  while (frontier) {
    int v = __builtin_ctzll(frontier);
    frontier &= frontier - 1;
    std::uint64_t fresh = adj[v] & all & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen == all;
}

// In a maximal planar graph with n >= 4 the faces are exactly the
// non-separating triangles.
std::vector<std::array<int, 3>> facial_triangles(const Masks& adj) {
  int n = static_cast<int>(adj.size());
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!(adj[a] >> b & 1)) continue;
      for (int c = b + 1; c < n; ++c)
        if ((adj[a] >> c & 1) && (adj[b] >> c & 1) &&
            connected_without(adj, (1ULL << a) | (1ULL << b) | (1ULL << c)))
          out.push_back({a, b, c});
    }
  return out;
}

// Lexicographically least upper-triangle bit string over relabellings that
// list vertices by ascending degree.
std::vector<bool> canonical_key(const Masks& adj, std::vector<int>* best_perm) {
  int n = static_cast<int>(adj.size());
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  auto deg = [&](int v) { return __builtin_popcountll(adj[v]); };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return deg(a) < deg(b); });
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && deg(order[j]) == deg(order[i])) ++j;
    blocks.push_back({i, j});
    i = j;
  }
  std::vector<bool> best, key;
  std::function<void(std::size_t)> rec = [&](std::size_t blk) {
    if (blk == blocks.size()) {
      key.clear();
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) key.push_back(adj[order[i]] >> order[j] & 1);
      if (best.empty() || key < best) {
        best = key;
        if (best_perm) *best_perm = order;
      }
      return;
    }
    auto [lo, hi] = blocks[blk];
    std::sort(order.begin() + lo, order.begin() + hi);
    do rec(blk + 1);
    while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  rec(0);
  return best;
}

Graph from_masks(const Masks& adj, const std::vector<int>& order) {
  int n = static_cast<int>(adj.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (adj[order[i]] >> order[j] & 1) edges.push_back({i, j});
  return Graph(n, edges);
}

}  // namespace

std::vector<Graph> planar_triangulations(int n) {
  if (n < 3 || n > 10) throw DomainError("planar_triangulations supports 3 <= n <= 10");
  if (n == 3) return {Graph(3, {{0, 1}, {0, 2}, {1, 2}})};
  std::vector<Masks> level = {{0b1110, 0b1101, 0b1011, 0b0111}};
  for (int size = 5; size <= n; ++size) {
    std::map<std::vector<bool>, Masks> found;
    std::vector<Masks> todo;
    auto visit = [&](const Masks& m) {
      auto key = canonical_key(m, nullptr);
      if (found.emplace(key, m).second) todo.push_back(m);
    };
    // Stack a vertex on every face, then close under edge flips.
    for (const Masks& t : level)
      for (auto [a, b, c] : facial_triangles(t)) {
        Masks m = t;
        int v = size - 1;
        m.push_back((1ULL << a) | (1ULL << b) | (1ULL << c));
        for (int u : {a, b, c}) m[u] |= 1ULL << v;
        visit(m);
      }
    while (!todo.empty()) {
      Masks t = todo.back();
      todo.pop_back();
      auto faces = facial_triangles(t);
      for (int u = 0; u < size; ++u)
        for (int v = u + 1; v < size; ++v) {
          if (!(t[u] >> v & 1)) continue;
          std::vector<int> apex;
          for (const auto& f : faces)
            if (std::count(f.begin(), f.end(), u) && std::count(f.begin(), f.end(), v))
              for (int w : f)
                if (w != u && w != v) apex.push_back(w);
          if (apex.size() != 2 || (t[apex[0]] >> apex[1] & 1)) continue;
          Masks m = t;
          m[u] &= ~(1ULL << v);
          m[v] &= ~(1ULL << u);
          m[apex[0]] |= 1ULL << apex[1];
          m[apex[1]] |= 1ULL << apex[0];
          visit(m);
        }
    }
    level.clear();
    for (auto& [key, m] : found) level.push_back(m);
  }
  std::vector<Graph> out;
  for (const Masks& m : level) {
    std::vector<int> order;
    canonical_key(m, &order);
    out.push_back(from_masks(m, order));
  }
  return out;
}

}  // namespace affcov
