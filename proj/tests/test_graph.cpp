#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "affcov/graph.hpp"

using namespace affcov;

namespace {

// Reference encoder written independently: build the bit string, then cut
// it into 6-bit groups.
std::string reference_graph6(const Graph& g) {
  std::string bits;
  for (int j = 1; j < g.n(); ++j)
    for (int i = 0; i < j; ++i) bits += g.has_edge(i, j) ? '1' : '0';
  while (bits.size() % 6) bits += '0';
  std::string out(1, static_cast<char>(63 + g.n()));
  for (std::size_t k = 0; k < bits.size(); k += 6)
    out += static_cast<char>(63 + std::stoi(bits.substr(k, 6), nullptr, 2));
  return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.n()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges())
      if (!b.has_edge(perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<Graph> small_graphs() {
  std::vector<Graph> out;
  for (int n = 1; n <= 4; ++n) {
    int pairs = n * (n - 1) / 2;
    for (int mask = 0; mask < (1 << pairs); mask += (n == 4 ? 7 : 1)) {
      std::vector<Edge> e;
      int k = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k)
          if (mask >> k & 1) e.emplace_back(i, j);
      out.emplace_back(n, e);
    }
  }
  out.push_back(family_from_string("cycle:5"));
  out.push_back(family_from_string("complete_bipartite:2,3"));
  return out;
}

}  // namespace

TEST_CASE("graph6 parsing and encoding") {
  Graph k5 = parse_graph("D~{", GraphFormat::graph6);
  CHECK(k5.n() == 5);
  CHECK(k5.m() == 10);
  CHECK(reference_graph6(k5) == "D~{");
  CHECK(to_graph6(k5) == "D~{");
  CHECK(parse_graph(">>graph6<<D~{\n", GraphFormat::graph6) == k5);
  // Strings produced by networkx.
  CHECK(to_graph6(family_from_string("cycle:5")) == "Dhc");
  CHECK(to_graph6(family_from_string("path:4")) == "Ch");
  CHECK(to_graph6(family_from_string("complete_bipartite:3,3")) == "EFz_");
  CHECK(to_graph6(family_from_string("petersen")) == "IheA@GUAo");
  CHECK(to_graph6(Graph(3)) == "B?");
  CHECK(to_graph6(family_from_string("caterpillar:1,6")) == "FsaC?");
  Graph k70 = family_from_string("complete:70");
  std::string s = to_graph6(k70);
  CHECK(s.size() == 407);
  CHECK(s.substr(0, 4) == "~?@E");
  CHECK(parse_graph(s, GraphFormat::graph6) == k70);
  CHECK_THROWS_AS(parse_graph("D~", GraphFormat::graph6), ParseError);
  CHECK_THROWS_AS(parse_graph("D~{{", GraphFormat::graph6), ParseError);
  CHECK_THROWS_AS(parse_graph("", GraphFormat::graph6), ParseError);
}

TEST_CASE("graph6 round trip on small graphs") {
  for (const auto& g : small_graphs()) {
    CHECK(to_graph6(g) == reference_graph6(g));
    CHECK(parse_graph(to_graph6(g), GraphFormat::graph6) == g);
  }
}

TEST_CASE("edge list parsing") {
  Graph g = parse_graph("0 1", GraphFormat::edge_list);
  CHECK(g.n() == 2);
  CHECK(g.m() == 1);
  Graph h = parse_graph("# triangle\nn 4\n0 1\n1 2  # spoke\n\n2 0\n", GraphFormat::edge_list);
  CHECK(h.n() == 4);
  CHECK(h.m() == 3);
  CHECK(parse_graph(to_edge_list(h), GraphFormat::edge_list) == h);
  auto error_of = [](const char* text) {
    try {
      parse_graph(text, GraphFormat::edge_list);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(error_of("0 0").find("self-loop") != std::string::npos);
  CHECK(error_of("0 1\n1 0").find("line 2") != std::string::npos);
  CHECK(error_of("0 1\n1 0").find("duplicate") != std::string::npos);
  CHECK(error_of("n 2\n0 5").find("out of range") != std::string::npos);
  CHECK(error_of("0 x").find("line 1") != std::string::npos);
  CHECK(error_of("0 1\nn 3").find("header") != std::string::npos);
}

TEST_CASE("families") {
  CHECK(family_from_string("complete:6").m() == 15);
  CHECK(family_from_string("complete_bipartite:2,3").n() == 5);
  CHECK(family_from_string("complete_bipartite:2,3").m() == 6);
  for (int n = 1; n <= 64; ++n) CHECK(build_family({FamilyKind::complete, {n}}).m() == n * (n - 1) / 2);

  // Brute-force product: pairs (j,c) with j on a path and c on a triangle.
  Graph t4 = family_from_string("nested_triangles:4");
  int count = 0;
  for (int a = 0; a < 12; ++a)
    for (int b = a + 1; b < 12; ++b) {
      int ja = a / 3, ca = a % 3, jb = b / 3, cb = b % 3;
      bool adj = (ja == jb && ca != cb) || (ca == cb && std::abs(ja - jb) == 1);
      CHECK(t4.has_edge(a, b) == adj);
      count += adj;
    }
  CHECK(t4.n() == 12);
  CHECK(t4.m() == 21);
  CHECK(count == 21);

  Graph s3 = family_from_string("nested_squares:3");
  CHECK(s3.n() == 12);
  CHECK(s3.m() == 6 * 3 - 2);
  CHECK(s3.has_edge(0, 4));
  CHECK(s3.has_edge(2, 6));
  CHECK(s3.has_edge(5, 9));
  CHECK(s3.has_edge(7, 11));
  CHECK(family_from_string("c4xp:8").m() == 4 * 8 + 4 * 7);

  Graph t = family_from_string("complete_binary_tree:2");
  CHECK(t.n() == 7);
  CHECK(is_tree(t));
  CHECK(t.has_edge(2, 6));

  Graph cat = family_from_string("caterpillar:3,1,0,2");
  CHECK(cat.n() == 6);
  CHECK(cat.m() == 5);
  CHECK(cat.has_edge(2, 5));

  Graph k32 = family_from_string("balanced_multipartite:3,7");
  // Classes {0,1,2}, {3,4}, {5,6}.
  CHECK_FALSE(k32.has_edge(0, 2));
  CHECK_FALSE(k32.has_edge(3, 4));
  CHECK(k32.has_edge(2, 3));
  CHECK(k32.m() == 21 - 3 - 1 - 1);

  Graph fig = family_from_string("lva3_planar9");
  CHECK(fig.n() == 9);
  CHECK(fig.m() == 21);
  CHECK(family_from_string("icosahedron").m() == 30);
  CHECK(family_from_string("octahedron").m() == 12);
  CHECK(family_from_string("cube").m() == 12);
  for (const char* name : {"icosahedron", "cube", "petersen"}) {
    Graph g = family_from_string(name);
    int d = g.degree(0);
    for (int v = 0; v < g.n(); ++v) CHECK(g.degree(v) == d);
  }

  CHECK_THROWS_AS(family_from_string("nested_triangles:0"), DomainError);
  CHECK_THROWS_AS(family_from_string("complete_bipartite:3,2"), DomainError);
  CHECK_THROWS_AS(family_from_string("cycle:2"), DomainError);
  CHECK_THROWS_AS(family_from_string("blob:3"), ParseError);
}

TEST_CASE("cartesian product") {
  Graph prism = cartesian_product(family_from_string("cycle:3"), family_from_string("path:2"));
  CHECK(prism.n() == 6);
  CHECK(prism.m() == 9);
  // Definition check on every pair.
  Graph c3 = family_from_string("cycle:3"), p2 = family_from_string("path:2");
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      if (a == b) continue;
      int u = a / 2, v = a % 2, u2 = b / 2, v2 = b % 2;
      bool adj = (u == u2 && p2.has_edge(v, v2)) || (v == v2 && c3.has_edge(u, u2));
      CHECK(prism.has_edge(a, b) == adj);
    }
  Graph g = family_from_string("petersen");
  CHECK(cartesian_product(g, Graph(1)) == g);
  CHECK(isomorphic(cartesian_product(family_from_string("path:2"), family_from_string("path:2")),
                   family_from_string("cycle:4")));
}

TEST_CASE("cartesian product commutes up to isomorphism") {
  auto gs = small_graphs();
  std::vector<Graph> pick;
  for (std::size_t i = 0; i < gs.size(); i += 3) pick.push_back(gs[i]);
  for (const auto& a : pick)
    for (const auto& b : pick) {
      if (a.n() * b.n() > 8) continue;
      CHECK(isomorphic(cartesian_product(a, b), cartesian_product(b, a)));
    }
}

TEST_CASE("essential vertices") {
  CHECK(essential_vertices(family_from_string("cycle:5")).es == 0);
  CHECK(essential_vertices(family_from_string("complete:3")).es == 3);
  for (const char* name : {"petersen", "cube", "c4xp:1"}) {
    Graph g = family_from_string(name);
    bool cubic = true;
    for (int v = 0; v < g.n(); ++v) cubic = cubic && g.degree(v) == 3;
    if (cubic) CHECK(essential_vertices(g).es == g.n());
  }
  for (const auto& g : small_graphs()) {
    auto ess = essential_vertices(g);
    for (int v = 0; v < g.n(); ++v)
      if (g.degree(v) >= 3)
        CHECK(std::find(ess.vertices.begin(), ess.vertices.end(), v) != ess.vertices.end());
  }
}

TEST_CASE("linear forests") {
  Graph p4 = family_from_string("path:4");
  CHECK(is_linear_forest(p4, {0, 1, 2, 3}));
  CHECK_FALSE(is_linear_forest(family_from_string("cycle:4"), {0, 1, 2, 3}));
  CHECK_FALSE(is_linear_forest(family_from_string("complete_bipartite:1,3"), {0, 1, 2, 3}));
  CHECK(is_linear_forest(family_from_string("cycle:4"), {0, 1, 2}));
  CHECK(is_linear_forest(p4, {}));
}

TEST_CASE("structural helpers") {
  CHECK(complete_bipartite_sides(family_from_string("complete_bipartite:2,5")) == std::make_pair(2, 5));
  CHECK_FALSE(complete_bipartite_sides(family_from_string("path:4")));
  CHECK(degeneracy(family_from_string("complete:5")) == 4);
  CHECK(degeneracy(family_from_string("complete_binary_tree:3")) == 1);
  Graph r = random_connected_graph(12, 0.2, 7);
  CHECK(is_connected(r));
  CHECK(r == random_connected_graph(12, 0.2, 7));
  CHECK(uniform_below(~0ULL, 10) == 9);
  CHECK(uniform_below(0, 10) == 0);
}
