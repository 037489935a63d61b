#include "doctest.h"

#include "affcov/bounds.hpp"

using namespace affcov;

namespace {

bool same_intervals(const BoundReport& a, const BoundReport& b) {
  for (Param p : kAllParams) {
    const auto &x = a[p], &y = b[p];
    if (x.defined != y.defined || x.lower != y.lower || x.verified_lower != y.verified_lower ||
        x.upper != y.upper)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parameter names round trip") {
  for (Param p : kAllParams) CHECK(param_from_string(to_string(p)) == p);
  CHECK_THROWS_AS(param_from_string("pi33"), ParseError);
}

TEST_CASE("K6 plane cover interval") {
  auto rep = bound_report(family_from_string("complete:6"));
  const auto& r = rep[Param::rho23];
  // 15 edges, at most 6 per plane through a K4.
  CHECK(r.verified_lower == 3);
  CHECK(r.lower == 4);
  REQUIRE(r.upper);
  CHECK(*r.upper == 4);
  CHECK_FALSE(rep[Param::pi12].defined);
  CHECK_FALSE(rep[Param::rho12].defined);
  CHECK(rep[Param::rho13].lower == 15);
}

TEST_CASE("nested triangles lower bound") {
  auto rep = bound_report(family_from_string("nested_triangles:4"));
  CHECK(rep[Param::rho12].lower == 6);
  bool seen = false;
  for (const auto& e : rep.entries) seen = seen || (e.rule == "Tk" && e.trust == Trust::asserted);
  CHECK(seen);
}

TEST_CASE("paths are on one line") {
  auto rep = bound_report(family_from_string("path:5"));
  CHECK(rep[Param::pi13].lower == 1);
  CHECK(rep[Param::pi13].upper == 1);
  CHECK(rep[Param::rho13].lower == 1);
  CHECK(rep[Param::pi12].upper <= 2);
}

TEST_CASE("complete bipartite bounds") {
  auto rep = bound_report(family_from_string("complete_bipartite:3,4"));
  CHECK(rep[Param::pibar13].lower == 4);
  CHECK(rep[Param::pibar13].upper == 4);
  CHECK(rep[Param::rho23].upper == 2);
  auto k2 = bound_report(family_from_string("complete_bipartite:2,5"));
  // n = 7: ceil((3n-7)/2) = 7, matched by the explicit drawing.
  CHECK(k2[Param::rho12].lower == 7);
  CHECK(k2[Param::rho12].upper == 7);
}

TEST_CASE("witness kinds map to parameters") {
  CHECK(certified_param(moment_curve_kn(5)) == Param::pi13);
  CHECK(certified_param(kpq_plane_book(2, 3)) == Param::rho23);
  CHECK(certified_param(parallel_kpq_lines(2, 3)) == Param::pibar13);
  CHECK(certified_param(pi23_drawing(family_from_string("complete:5"))) == Param::pi23);
  CHECK(certified_param(nested_squares_two_lines(2)) == Param::pi12);
  // Isolated vertex: an edge cover says nothing about where it sits.
  Graph g(3, {{0, 1}});
  auto res = pi13_drawing(g);
  CHECK(certified_param(res) == Param::pi13);
  auto lines = edge_line_count(res.drawing);
  auto edges = finish_construction(res.drawing.drawing(), lines.witness, lines.count);
  CHECK_FALSE(certified_param(edges));
}

TEST_CASE("bounds are consistent with witnesses") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = random_connected_graph(5 + static_cast<int>(seed % 6), 0.3 + 0.03 * static_cast<double>(seed % 5), seed);
    auto rep = bound_report(g);
    for (Param p : kAllParams) {
      const auto& b = rep[p];
      if (!b.defined) continue;
      CHECK(b.verified_lower <= b.lower);
      if (b.upper) CHECK(b.verified_lower <= *b.upper);
    }
    for (const auto& c : standard_constructions(g)) {
      auto p = certified_param(c);
      if (!p) continue;
      INFO(seed << " " << to_string(*p));
      CHECK(rep[*p].verified_lower <= c.witness.size());
      CHECK(*rep[*p].upper <= c.witness.size());
    }
    BoundReport again = rep;
    close_monotone(again);
    CHECK(same_intervals(again, rep));
    CHECK(again.entries.size() == rep.entries.size());
  }
}

TEST_CASE("monotone closure") {
  BoundReport r;
  r.add({Param::pi23, true, 3, "test", true, Trust::machine_verified, ""});
  r.add({Param::rho12, false, 5, "test", true, Trust::machine_verified, ""});
  close_monotone(r);
  CHECK(r[Param::rho23].lower == 3);
  CHECK(r[Param::pi13].lower == 3);
  CHECK(r[Param::pibar13].lower == 3);
  CHECK(r[Param::rho12].lower == 3);
  CHECK(r[Param::pi12].upper == 5);
  CHECK(r[Param::pi13].upper == 5);
  CHECK(r[Param::pi23].upper == 5);
  CHECK_FALSE(r[Param::pibar13].upper);
}
