#include "doctest.h"

#include <algorithm>
#include <functional>
#include <numeric>

#include "affcov/planar.hpp"
#include "affcov/solvers.hpp"

using namespace affcov;

namespace {

// Minimum number of classes by trying every assignment of vertices to at
// most k labels.
int brute_classes(const Graph& g, const std::function<bool(const std::vector<int>&)>& ok) {
  int n = g.n();
  for (int k = 1; k <= n; ++k) {
    std::vector<int> lab(static_cast<std::size_t>(n), 0);
    while (true) {
      bool good = true;
      for (int c = 0; c < k && good; ++c) {
        std::vector<int> part;
        for (int v = 0; v < n; ++v)
          if (lab[v] == c) part.push_back(v);
        good = ok(part);
      }
      if (good) return k;
      int i = 0;
      while (i < n && ++lab[i] == k) lab[i++] = 0;
      if (i == n) break;
    }
  }
  return 0;
}

int brute_bisection(const Graph& g) {
  int n = g.n(), best = -1;
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) != n / 2) continue;
    int cut = 0;
    for (auto [u, v] : g.edges()) cut += ((mask >> u) & 1) != ((mask >> v) & 1);
    if (best < 0 || cut < best) best = cut;
  }
  return best;
}

// Treewidth as the minimum over all elimination orders of the largest
// neighbourhood at elimination time.
int brute_treewidth(const Graph& g) {
  int n = g.n();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  int best = n;
  do {
    std::vector<std::vector<char>> a(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    int width = 0;
    for (int v : order) {
      std::vector<int> nb;
      for (int w = 0; w < n; ++w)
        if (!gone[w] && a[v][w]) nb.push_back(w);
      width = std::max(width, static_cast<int>(nb.size()));
      for (int x : nb)
        for (int y : nb)
          if (x != y) a[x][y] = 1;
      gone[v] = 1;
    }
    best = std::min(best, width);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

std::vector<Graph> corpus() {
  std::vector<Graph> gs;
  for (const char* f : {"complete:4", "cycle:5", "path:7", "petersen", "complete:5",
                        "complete_bipartite:3,3", "lva3_planar9", "octahedron", "cube",
                        "nested_triangles:3", "caterpillar:4,2", "complete_binary_tree:3",
                        "icosahedron", "complete:9"})
    gs.push_back(family_from_string(f));
  for (std::uint64_t seed = 0; seed < 30; ++seed)
    gs.push_back(random_connected_graph(6 + static_cast<int>(seed % 9), 0.3, seed));
  return gs;
}

}  // namespace

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(family_from_string("complete:4")).value == 4);
  CHECK(chromatic_number(family_from_string("cycle:5")).value == 3);
  Graph pet = family_from_string("petersen");
  auto r = chromatic_number(pet);
  CHECK(r.value == 3);
  CHECK(r.exact);
  CHECK(r.value == brute_classes(pet, [&](const std::vector<int>& p) { return is_independent(pet, p); }));
  CHECK_FALSE(check_partition(pet, r.partition));
  Budget tiny;
  tiny.chromatic_n = 3;
  auto fb = chromatic_number(pet, tiny);
  CHECK_FALSE(fb.exact);
  CHECK_FALSE(check_partition(pet, fb.partition));
}

TEST_CASE("linear vertex arboricity") {
  CHECK(lva_exact(family_from_string("cycle:5")).value == 2);
  CHECK(lva_exact(family_from_string("path:7")).value == 1);
  Graph fig = family_from_string("lva3_planar9");
  auto r = lva_exact(fig);
  CHECK(r.value == 3);
  CHECK_FALSE(check_partition(fig, r.partition));
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    Graph g = random_connected_graph(7, 0.4, seed);
    int brute = brute_classes(g, [&](const std::vector<int>& p) { return is_linear_forest(g, p); });
    CHECK(lva_exact(g).value == brute);
  }
}

TEST_CASE("vertex thickness") {
  CHECK(vertex_thickness_exact(family_from_string("complete:4")).value == 1);
  CHECK(vertex_thickness_exact(family_from_string("complete:9")).value == 3);
  Graph k5 = family_from_string("complete:5");
  auto r = vertex_thickness_exact(k5);
  CHECK(r.value == 2);
  CHECK(r.value == brute_classes(k5, [&](const std::vector<int>& p) { return is_planar(induced_subgraph(k5, p)); }));
  CHECK_FALSE(check_partition(k5, r.partition));
  Budget tiny;
  tiny.vt_n = 2;
  auto fb = vertex_thickness_exact(family_from_string("complete:9"), tiny);
  CHECK_FALSE(fb.exact);
  CHECK(fb.value == 3);
}

TEST_CASE("solver invariants over the corpus") {
  for (const auto& g : corpus()) {
    auto chi = chromatic_number(g);
    auto lva = lva_exact(g);
    auto vt = vertex_thickness_exact(g);
    REQUIRE(chi.exact);
    REQUIRE(lva.exact);
    CHECK_FALSE(check_partition(g, chi.partition));
    CHECK_FALSE(check_partition(g, lva.partition));
    CHECK_FALSE(check_partition(g, vt.partition));
    CHECK(2 * lva.value >= chi.value);
    CHECK(lva.value <= chi.value);
    CHECK(4 * vt.value >= chi.value);
    CHECK(vt.value <= chi.value);
    CHECK(vt.value <= (g.n() + 3) / 4);
    if (is_connected(g)) CHECK(lva.value <= g.max_degree() / 2 + 1);
  }
}

TEST_CASE("treewidth") {
  CHECK(treewidth_exact(family_from_string("complete:5")).upper == 4);
  CHECK(treewidth_exact(family_from_string("complete_binary_tree:3")).upper == 1);
  CHECK(treewidth_exact(family_from_string("path:2")).upper == 1);
  Graph c6 = family_from_string("cycle:6");
  CHECK(treewidth_exact(c6).upper == 2);
  CHECK(brute_treewidth(c6) == 2);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = random_connected_graph(7, 0.35, seed);
    auto t = treewidth_exact(g);
    CHECK(t.exact);
    CHECK(t.upper == brute_treewidth(g));
  }
  Budget tiny;
  tiny.treewidth_n = 4;
  auto fb = treewidth_exact(family_from_string("petersen"), tiny);
  CHECK(fb.lower <= 4);
  CHECK(fb.upper >= 4);
  CHECK(treewidth_exact(family_from_string("petersen")).upper == 4);
}

TEST_CASE("bisection width") {
  Graph k4 = family_from_string("complete:4");
  CHECK(bisection_width_exact(k4).value == 4);
  CHECK(brute_bisection(k4) == 4);
  CHECK(bisection_width_exact(family_from_string("path:6")).value == 1);
  Graph k33 = family_from_string("complete_bipartite:3,3");
  CHECK(bisection_width_exact(k33).value == 5);
  CHECK(brute_bisection(k33) == 5);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = random_connected_graph(9 + static_cast<int>(seed % 3), 0.3, seed);
    CHECK(bisection_width_exact(g).value == brute_bisection(g));
  }
}

TEST_CASE("clique covers of complete graphs") {
  auto c54 = clique_cover_exact(5, 4);
  CHECK(c54.value == 3);
  CHECK(c54.exact);
  auto c64 = clique_cover_exact(6, 4);
  CHECK(c64.value == 3);
  auto c73 = clique_cover_exact(7, 3);
  CHECK(c73.value == 7);
  CHECK_FALSE(check_clique_cover(c73.cover));
  CHECK(clique_cover_refutes(9, 4, 6));
  for (int n = 3; n <= 9; ++n)
    for (int s : {3, 4}) {
      auto r = clique_cover_exact(n, s);
      REQUIRE(r.exact);
      CHECK_FALSE(check_clique_cover(r.cover));
      CHECK(static_cast<int>(r.cover.blocks.size()) == r.value);
      if (s < n) {
        auto sb = steiner_bounds(n, s);
        CHECK(r.value >= sb.lower);
        if (sb.exact_exists) CHECK(r.value == sb.lower);
      }
    }
}

TEST_CASE("steiner bounds") {
  CHECK(steiner_bounds(7, 3).lower == 7);
  CHECK(steiner_bounds(7, 3).exact_exists);
  CHECK(steiner_bounds(9, 4).lower == 6);
  CHECK_FALSE(steiner_bounds(9, 4).exact_exists);
  CHECK(steiner_bounds(13, 4).lower == 13);
  CHECK(steiner_bounds(13, 4).exact_exists);
  CHECK(steiner_bounds(9, 3).exact_exists);
  CHECK_FALSE(steiner_bounds(8, 3).exact_exists);
}
