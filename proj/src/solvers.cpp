#include "affcov/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>

#include "affcov/planar.hpp"

namespace affcov {

using Mask = std::uint64_t;

std::optional<std::string> check_partition(const Graph& g, const Partition& p) {
  std::vector<int> seen(static_cast<std::size_t>(g.n()), 0);
  for (const auto& c : p.classes)
    for (int v : c) {
      if (v < 0 || v >= g.n()) return "vertex " + std::to_string(v) + " out of range";
      if (seen[v]++) return "vertex " + std::to_string(v) + " in two classes";
    }
  for (int v = 0; v < g.n(); ++v)
    if (!seen[v]) return "vertex " + std::to_string(v) + " unassigned";
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    const auto& c = p.classes[i];
    bool ok = true;
    switch (p.certifies) {
      case PartitionKind::proper_coloring: ok = is_independent(g, c); break;
      case PartitionKind::lva: ok = is_linear_forest(g, c); break;
      case PartitionKind::vertex_thickness: ok = is_planar(induced_subgraph(g, c)); break;
    }
    if (!ok) return "class " + std::to_string(i) + " violates its predicate";
  }
  return std::nullopt;
}

Budget Budget::from_env() {
  Budget b;
  if (const char* s = std::getenv("AFFCOV_BUDGET_N")) {
    int cap = std::atoi(s);
    if (cap > 0) {
      b.chromatic_n = std::min(b.chromatic_n, cap);
      b.lva_n = std::min(b.lva_n, cap);
      b.vt_n = std::min(b.vt_n, cap);
      b.treewidth_n = std::min(b.treewidth_n, cap);
      b.bisection_n = std::min(b.bisection_n, cap);
    }
  }
  if (const char* s = std::getenv("AFFCOV_BUDGET_NODES")) {
    long long v = std::atoll(s);
    if (v > 0) b.nodes = static_cast<std::uint64_t>(v);
  }
  return b;
}

// ------------------------------------------------------ partition search

namespace {

// Assigns vertices 0..n-1 in order to at most k classes; a new class is
// opened only as the next unused index. `fits` tests a vertex against a
// class, `place`/`unplace` maintain predicate state.
struct ClassSearch {
  int n = 0;
  int k = 0;
  std::vector<Mask> cls;
  std::vector<int> class_of;
  std::function<bool(int, int)> fits;
  std::function<void(int, int)> place;
  std::function<void(int, int)> unplace;
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
  bool aborted = false;

  bool run(int v, int used) {
    if (v == n) return true;
    if (++nodes > budget) {
      aborted = true;
      return false;
    }
    for (int c = 0; c < std::min(used + 1, k); ++c) {
      if (!fits(v, c)) continue;
      cls[c] |= Mask{1} << v;
      class_of[v] = c;
      if (place) place(v, c);
      bool ok = run(v + 1, std::max(used, c + 1));
      if (ok) return true;
      if (unplace) unplace(v, c);
      cls[c] &= ~(Mask{1} << v);
      if (aborted) return false;
    }
    return false;
  }

  Partition partition(PartitionKind kind) const {
    Partition p;
    p.certifies = kind;
    int used = 0;
    for (int c : class_of) used = std::max(used, c + 1);
    p.classes.resize(static_cast<std::size_t>(used));
    for (int v = 0; v < n; ++v) p.classes[class_of[v]].push_back(v);
    return p;
  }
};

// Smallest k for which the search succeeds; -1 on budget exhaustion.
template <typename Setup>
int minimum_classes(int n, std::uint64_t budget, Setup setup, ClassSearch& out) {
  if (n == 0) return 0;
  std::uint64_t spent = 0;
  for (int k = 1; k <= n; ++k) {
    ClassSearch cs;
    cs.n = n;
    cs.k = k;
    cs.cls.assign(static_cast<std::size_t>(k), 0);
    cs.class_of.assign(static_cast<std::size_t>(n), -1);
    cs.budget = budget - spent;
    setup(cs);
    bool ok = cs.run(0, 0);
    spent += cs.nodes;
    if (cs.aborted) return -1;
    if (ok) {
      out = std::move(cs);
      return k;
    }
  }
  return -1;
}

}  // namespace

Partition greedy_coloring(const Graph& g) {
  std::vector<int> col(static_cast<std::size_t>(g.n()), -1);
  int used = 0;
  for (int v = 0; v < g.n(); ++v) {
    std::vector<char> taken(static_cast<std::size_t>(used) + 1, 0);
    for (int w : g.neighbors(v))
      if (col[w] >= 0) taken[col[w]] = 1;
    int c = 0;
    while (taken[c]) ++c;
    col[v] = c;
    used = std::max(used, c + 1);
  }
  Partition p;
  p.certifies = PartitionKind::proper_coloring;
  p.classes.resize(static_cast<std::size_t>(used));
  for (int v = 0; v < g.n(); ++v) p.classes[col[v]].push_back(v);
  return p;
}

PartitionResult chromatic_number(const Graph& g, const Budget& b) {
  PartitionResult r;
  if (g.n() <= b.chromatic_n && g.n() <= 64) {
    auto adj = g.adjacency_masks();
    ClassSearch found;
    int k = minimum_classes(g.n(), b.nodes, [&](ClassSearch& cs) {
      cs.fits = [&adj, &cs](int v, int c) { return (adj[v] & cs.cls[c]) == 0; };
    }, found);
    if (k >= 0) {
      r.value = k;
      r.partition = found.partition(PartitionKind::proper_coloring);
      return r;
    }
  }
  r.partition = greedy_coloring(g);
  r.value = static_cast<int>(r.partition.classes.size());
  r.exact = false;
  return r;
}

namespace {

bool joined_in(const std::vector<Mask>& adj, Mask cls, int a, int b) {
  Mask reach = Mask{1} << a, frontier = reach;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)] & cls;
    frontier = next & ~reach;
    reach |= next;
  }
  return reach >> b & 1;
}

}  // namespace

PartitionResult lva_exact(const Graph& g, const Budget& b) {
  PartitionResult r;
  if (g.n() <= b.lva_n && g.n() <= 64) {
    auto adj = g.adjacency_masks();
    std::vector<int> deg(static_cast<std::size_t>(g.n()), 0);
    ClassSearch found;
    int k = minimum_classes(g.n(), b.nodes, [&](ClassSearch& cs) {
      std::fill(deg.begin(), deg.end(), 0);
      cs.fits = [&adj, &deg, &cs](int v, int c) {
        Mask nb = adj[v] & cs.cls[c];
        int cnt = std::popcount(nb);
        if (cnt > 2) return false;
        for (Mask m = nb; m; m &= m - 1)
          if (deg[std::countr_zero(m)] >= 2) return false;
        if (cnt == 2) {
          int a = std::countr_zero(nb);
          int b2 = std::countr_zero(nb & (nb - 1));
          if (joined_in(adj, cs.cls[c], a, b2)) return false;
        }
        return true;
      };
      cs.place = [&adj, &deg, &cs](int v, int c) {
        Mask nb = adj[v] & cs.cls[c] & ~(Mask{1} << v);
        deg[v] = std::popcount(nb);
        for (Mask m = nb; m; m &= m - 1) ++deg[std::countr_zero(m)];
      };
      cs.unplace = [&adj, &deg, &cs](int v, int c) {
        Mask nb = adj[v] & cs.cls[c] & ~(Mask{1} << v);
        deg[v] = 0;
        for (Mask m = nb; m; m &= m - 1) --deg[std::countr_zero(m)];
      };
    }, found);
    if (k >= 0) {
      r.value = k;
      r.partition = found.partition(PartitionKind::lva);
      return r;
    }
  }
  auto col = chromatic_number(g, b);
  r.partition = col.partition;
  r.partition.certifies = PartitionKind::lva;
  r.value = col.value;
  r.exact = false;
  return r;
}

PartitionResult vertex_thickness_exact(const Graph& g, const Budget& b) {
  PartitionResult r;
  if (g.n() <= b.vt_n && g.n() <= 64) {
    ClassSearch found;
    int k = minimum_classes(g.n(), b.nodes, [&](ClassSearch& cs) {
      cs.fits = [&g, &cs](int v, int c) {
        Mask m = cs.cls[c] | Mask{1} << v;
        if (std::popcount(m) < 5) return true;
        std::vector<int> part;
        for (Mask x = m; x; x &= x - 1) part.push_back(std::countr_zero(x));
        return is_planar(induced_subgraph(g, part));
      };
    }, found);
    if (k >= 0) {
      r.value = k;
      r.partition = found.partition(PartitionKind::vertex_thickness);
      return r;
    }
  }
  r.partition.certifies = PartitionKind::vertex_thickness;
  for (int v = 0; v < g.n(); v += 4) {
    r.partition.classes.emplace_back();
    for (int w = v; w < std::min(v + 4, g.n()); ++w) r.partition.classes.back().push_back(w);
  }
  r.value = static_cast<int>(r.partition.classes.size());
  r.exact = false;
  return r;
}

// --------------------------------------------------------------- treewidth

namespace {

int min_fill_width(const Graph& g) {
  int n = g.n();
  std::vector<std::vector<char>> a(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  int width = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1, best_fill = 0;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      std::vector<int> nb;
      for (int w = 0; w < n; ++w)
        if (!gone[w] && a[v][w]) nb.push_back(w);
      int fill = 0;
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) fill += !a[nb[i]][nb[j]];
      if (pick < 0 || fill < best_fill) {
        pick = v;
        best_fill = fill;
      }
    }
    std::vector<int> nb;
    for (int w = 0; w < n; ++w)
      if (!gone[w] && a[pick][w]) nb.push_back(w);
    width = std::max(width, static_cast<int>(nb.size()));
    for (int x : nb)
      for (int y : nb)
        if (x != y) a[x][y] = 1;
    gone[pick] = 1;
  }
  return width;
}

}  // namespace

TreewidthResult treewidth_exact(const Graph& g, const Budget& b) {
  TreewidthResult r;
  int n = g.n();
  if (n <= 1) return r;
  if (n > b.treewidth_n || n > 24) {
    r.lower = degeneracy(g);
    r.upper = min_fill_width(g);
    r.exact = r.lower == r.upper;
    return r;
  }
  auto adj = g.adjacency_masks();
  std::uint32_t full = (1u << n) - 1;
  std::vector<std::int8_t> tw(static_cast<std::size_t>(full) + 1, 0);
  tw[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int best = 127;
    for (std::uint32_t m = s; m; m &= m - 1) {
      int v = std::countr_zero(m);
      std::uint32_t rest = s & ~(1u << v);
      int prev = tw[rest];
      if (prev >= best) continue;
      // Component of v in G[rest + v], then its neighbours outside.
      std::uint32_t reach = 1u << v, frontier = reach;
      while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1)
          next |= static_cast<std::uint32_t>(adj[std::countr_zero(f)]) & rest;
        frontier = next & ~reach;
        reach |= next;
      }
      std::uint32_t around = 0;
      for (std::uint32_t f = reach; f; f &= f - 1)
        around |= static_cast<std::uint32_t>(adj[std::countr_zero(f)]);
      around &= ~(rest | (1u << v));
      best = std::min(best, std::max(prev, std::popcount(around)));
    }
    tw[s] = static_cast<std::int8_t>(best);
  }
  r.lower = r.upper = tw[full];
  return r;
}

// --------------------------------------------------------------- bisection

BisectionResult bisection_width_exact(const Graph& g, const Budget& b) {
  BisectionResult r;
  int n = g.n();
  int half = n / 2;
  if (half == 0) return r;
  auto cut_of = [&g](const std::vector<char>& in) {
    int c = 0;
    for (auto [u, v] : g.edges()) c += in[u] != in[v];
    return c;
  };
  if (n > b.bisection_n || n > 62) {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < half; ++v) {
      in[v] = 1;
      r.side.push_back(v);
    }
    r.value = cut_of(in);
    r.exact = false;
    return r;
  }
  auto adj = g.adjacency_masks();
  Mask all = (Mask{1} << n) - 1;
  Mask best_set = 0;
  int best = -1;
  for (Mask s = (Mask{1} << half) - 1; s <= all;) {
    int cut = 0;
    for (Mask m = s; m; m &= m - 1) cut += std::popcount(adj[std::countr_zero(m)] & ~s);
    if (best < 0 || cut < best) {
      best = cut;
      best_set = s;
    }
    Mask c = s & -s, t = s + c;
    if (t > all || t == 0) break;
    s = (((t ^ s) >> 2) / c) | t;
  }
  r.value = best;
  for (Mask m = best_set; m; m &= m - 1) r.side.push_back(std::countr_zero(m));
  return r;
}

// ------------------------------------------------------------ clique cover

namespace {

using EdgeMask = unsigned __int128;

struct CliqueSearch {
  int n = 0;
  int s = 0;
  std::vector<std::vector<int>> edge_id;
  std::vector<EdgeMask> block_mask;
  std::vector<std::vector<int>> block_verts;
  std::vector<std::vector<int>> blocks_with_edge;
  std::vector<int> chosen;
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
  bool aborted = false;

  static int popcount(EdgeMask m) {
    return std::popcount(static_cast<std::uint64_t>(m)) +
           std::popcount(static_cast<std::uint64_t>(m >> 64));
  }
  static int lowest(EdgeMask m) {
    auto lo = static_cast<std::uint64_t>(m);
    return lo ? std::countr_zero(lo) : 64 + std::countr_zero(static_cast<std::uint64_t>(m >> 64));
  }

  void build() {
    edge_id.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    int e = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) edge_id[i][j] = edge_id[j][i] = e++;
    blocks_with_edge.assign(static_cast<std::size_t>(e), {});
    std::vector<int> cur;
    std::function<void(int)> gen = [&](int from) {
      if (static_cast<int>(cur.size()) == s) {
        EdgeMask m = 0;
        for (std::size_t a = 0; a < cur.size(); ++a)
          for (std::size_t b = a + 1; b < cur.size(); ++b) m |= EdgeMask{1} << edge_id[cur[a]][cur[b]];
        int id = static_cast<int>(block_mask.size());
        block_mask.push_back(m);
        block_verts.push_back(cur);
        for (EdgeMask x = m; x; x &= x - 1) blocks_with_edge[lowest(x)].push_back(id);
        return;
      }
      for (int v = from; v < n; ++v) {
        cur.push_back(v);
        gen(v + 1);
        cur.pop_back();
      }
    };
    gen(0);
  }

  bool hopeless(EdgeMask unc, int remaining) const {
    int pair_cap = s * (s - 1) / 2;
    if (popcount(unc) > remaining * pair_cap) return true;
    int total = 0;
    for (int v = 0; v < n; ++v) {
      int u = 0;
      for (int w = 0; w < n; ++w)
        if (w != v && (unc >> edge_id[v][w] & 1)) ++u;
      int need = (u + s - 2) / (s - 1);
      if (need > remaining) return true;
      total += need;
    }
    return total > s * remaining;
  }

  bool run(EdgeMask unc, int remaining) {
    if (!unc) return true;
    if (remaining == 0) return false;
    if (++nodes > budget) {
      aborted = true;
      return false;
    }
    if (hopeless(unc, remaining)) return false;
    int e = lowest(unc);
    for (int b : blocks_with_edge[e]) {
      chosen.push_back(b);
      if (run(unc & ~block_mask[b], remaining - 1)) return true;
      chosen.pop_back();
      if (aborted) return false;
    }
    return false;
  }

  // Try a cover with `size` blocks; the first block is {0..s-1}.
  bool attempt(int size) {
    chosen.clear();
    int e_count = n * (n - 1) / 2;
    EdgeMask all = e_count == 128 ? ~EdgeMask{0} : (EdgeMask{1} << e_count) - 1;
    if (size < 1) return e_count == 0;
    chosen.push_back(0);  // lexicographically first block is {0,...,s-1}
    return run(all & ~block_mask[0], size - 1);
  }

  CliqueCover cover() const {
    CliqueCover c{n, s, {}};
    for (int b : chosen) c.blocks.push_back(block_verts[b]);
    return c;
  }
};

}  // namespace

std::optional<std::string> check_clique_cover(const CliqueCover& c) {
  std::vector<std::vector<char>> hit(static_cast<std::size_t>(c.n), std::vector<char>(static_cast<std::size_t>(c.n), 0));
  for (const auto& b : c.blocks) {
    if (static_cast<int>(b.size()) > c.s) return "block larger than s";
    for (int v : b)
      if (v < 0 || v >= c.n) return "block vertex out of range";
    for (int x : b)
      for (int y : b) hit[x][y] = 1;
  }
  for (int i = 0; i < c.n; ++i)
    for (int j = i + 1; j < c.n; ++j)
      if (!hit[i][j]) return "pair {" + std::to_string(i) + "," + std::to_string(j) + "} uncovered";
  return std::nullopt;
}

SteinerBounds steiner_bounds(int n, int k) {
  if (k != 3 && k != 4) throw DomainError("steiner_bounds needs k in {3,4}");
  if (n < 1) throw DomainError("steiner_bounds needs n >= 1");
  SteinerBounds r;
  long num = static_cast<long>(n) * (n - 1), den = static_cast<long>(k) * (k - 1);
  r.lower = static_cast<int>((num + den - 1) / den);
  r.exact_exists = k == 3 ? (n % 6 == 1 || n % 6 == 3) : (n % 12 == 1 || n % 12 == 4);
  return r;
}

CliqueCoverResult clique_cover_exact(int n, int s, std::uint64_t node_budget) {
  if (n < 1 || s < 2) throw DomainError("clique_cover_exact needs n >= 1, s >= 2");
  if (n > 16) throw DomainError("clique_cover_exact supports n <= 16");
  CliqueCoverResult r;
  r.cover = {n, s, {}};
  if (n == 1) return r;
  if (s >= n) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[v] = v;
    r.cover.blocks.push_back(all);
    r.value = r.lower = 1;
    return r;
  }
  CliqueSearch cs;
  cs.n = n;
  cs.s = s;
  cs.budget = node_budget;
  cs.build();
  long pairs = static_cast<long>(n) * (n - 1) / 2, cap = static_cast<long>(s) * (s - 1) / 2;
  int size = static_cast<int>((pairs + cap - 1) / cap);
  r.lower = size;
  while (true) {
    if (cs.attempt(size)) {
      r.value = size;
      r.cover = cs.cover();
      break;
    }
    if (cs.aborted) {
      // Greedy completion: lowest uncovered pair joined with the next
      // vertices that add the most new pairs.
      r.exact = false;
      CliqueCover c{n, s, {}};
      std::vector<std::vector<char>> hit(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if (hit[i][j]) continue;
          std::vector<int> b{i, j};
          while (static_cast<int>(b.size()) < s) {
            int pick = -1, gain = -1;
            for (int w = 0; w < n; ++w) {
              if (std::find(b.begin(), b.end(), w) != b.end()) continue;
              int g = 0;
              for (int x : b) g += !hit[std::min(x, w)][std::max(x, w)];
              if (g > gain) {
                gain = g;
                pick = w;
              }
            }
            b.push_back(pick);
          }
          std::sort(b.begin(), b.end());
          for (int x : b)
            for (int y : b) hit[x][y] = 1;
          c.blocks.push_back(b);
        }
      r.cover = c;
      r.value = static_cast<int>(c.blocks.size());
      break;
    }
    r.lower = ++size;
  }
  if (r.exact) r.lower = r.value;
  r.nodes = cs.nodes;
  return r;
}

bool clique_cover_refutes(int n, int s, int size, std::uint64_t node_budget) {
  if (n < 2 || s < 2 || s >= n || n > 16) throw DomainError("clique_cover_refutes: bad parameters");
  CliqueSearch cs;
  cs.n = n;
  cs.s = s;
  cs.budget = node_budget;
  cs.build();
  bool found = cs.attempt(size);
  if (cs.aborted) throw DomainError("clique_cover_refutes: node budget exhausted");
  return !found;
}

}  // namespace affcov
