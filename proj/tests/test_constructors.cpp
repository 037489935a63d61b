#include "doctest.h"

#include <cmath>
#include <functional>

#include "affcov/constructors.hpp"

using namespace affcov;

namespace {

// Fewest linear forests by trying every labelling with k labels.
int brute_lva(const Graph& g) {
  int n = g.n();
  for (int k = 1; k <= n; ++k) {
    std::vector<int> lab(static_cast<std::size_t>(n), 0);
    while (true) {
      bool good = true;
      for (int c = 0; c < k && good; ++c) {
        std::vector<int> part;
        for (int v = 0; v < n; ++v)
          if (lab[v] == c) part.push_back(v);
        good = is_linear_forest(g, part);
      }
      if (good) return k;
      int i = 0;
      while (i < n && ++lab[i] == k) lab[i++] = 0;
      if (i == n) break;
    }
  }
  return 0;
}

bool within(const std::vector<Integer>& box, std::initializer_list<long> lim) {
  std::size_t i = 0;
  for (long l : lim)
    if (box[i++] > l) return false;
  return true;
}

}  // namespace

TEST_CASE("host drawing of balanced multipartite graphs") {
  auto r = pach_multipartite(2, 4);
  const auto& pts = r.drawing.points();
  CHECK(pts[0] == QPoint::from_ints({0, 0, 0}));
  CHECK(pts[1] == QPoint::from_ints({0, 3, 0}));
  CHECK(pts[2] == QPoint::from_ints({1, 1, 1}));
  CHECK(pts[3] == QPoint::from_ints({1, 4, 4}));
  CHECK(r.witness.size() == 2);
  CHECK(pach_prime(3) == 5);
  CHECK(pach_prime(4) == 7);
  CHECK(pach_prime(1) == 2);
  auto r3 = pach_multipartite(3, 3);
  CHECK(r3.drawing.points()[2] == QPoint::from_ints({2, 4, 8}));
  CHECK_THROWS_AS(pach_multipartite(2, 3), DomainError);
  for (int k = 2; k <= 4; ++k)
    for (int n = k; n <= 24; n += k) {
      auto res = pach_multipartite(k, n);
      CHECK(within(res.box, {k, 4L * n, 4L * k * n}));
      // Joined classes add n - k path edges to K^k(n).
      long classes = n / k;
      CHECK(res.drawing.graph().m() == static_cast<long>(n) * (n - 1) / 2 - k * classes * (classes - 1) / 2 + (n - k));
    }
}

TEST_CASE("vertices on lva lines") {
  CHECK(pi13_drawing(family_from_string("cycle:5")).witness.size() == 2);
  CHECK(pi13_drawing(family_from_string("path:6")).witness.size() == 1);
  auto fig = pi13_drawing(family_from_string("lva3_planar9"));
  CHECK(fig.witness.size() == 3);
  CHECK(fig.optimal);
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Graph g = random_connected_graph(5 + static_cast<int>(seed % 4), 0.4, seed);
    auto res = pi13_drawing(g);
    long r = res.witness.size(), n = g.n();
    CHECK(r == brute_lva(g));
    CHECK(within(res.box, {r, 4 * r * n, 4 * r * r * n}));
    CHECK(min_vertex_line_cover(res.drawing).count <= r);
  }
}

TEST_CASE("vertices on parallel planes") {
  auto k5 = pi23_drawing(family_from_string("complete:5"));
  CHECK(k5.witness.size() == 2);
  CHECK(planes_parallel(k5.witness.planes));
  Graph ico = family_from_string("icosahedron");
  auto flat = pi23_drawing(ico);
  CHECK(flat.witness.size() == 1);
  Drawing grid = grid_drawing(ico);
  for (int v = 0; v < ico.n(); ++v) {
    CHECK(flat.drawing.points()[v][0] == grid.points[v][0]);
    CHECK(flat.drawing.points()[v][2] == 0);
  }
  auto k9 = pi23_drawing(family_from_string("complete:9"), {7, 64});
  CHECK(k9.witness.size() == 3);
  auto again = pi23_drawing(family_from_string("complete:9"), {7, 64});
  CHECK(again.drawing.points() == k9.drawing.points());
}

TEST_CASE("complete graphs on the moment curve") {
  for (int n = 1; n <= 10; ++n) {
    auto res = moment_curve_kn(n);
    CHECK(res.witness.size() == (n + 1) / 2);
    CHECK(min_vertex_line_cover(res.drawing).count == (n + 1) / 2);
  }
}

TEST_CASE("book drawings of complete bipartite graphs") {
  for (auto [p, q] : {std::pair{3, 4}, {1, 5}, {4, 4}, {2, 6}, {5, 5}}) {
    auto res = kpq_plane_book(p, q);
    CHECK(res.witness.size() == (p + 1) / 2);
    CHECK(min_edge_plane_cover(res.drawing).count == (p + 1) / 2);
  }
}

TEST_CASE("complete bipartite graphs on parallel lines") {
  for (auto [p, q] : {std::pair{2, 3}, {3, 5}, {1, 4}, {4, 4}}) {
    auto res = parallel_kpq_lines(p, q);
    CHECK(res.witness.size() == p + 1);
    CHECK(min_parallel_line_cover(res.drawing).count == p + 1);
  }
  CHECK(parallel_kpq_lines(1, 1).witness.size() == 2);
}

TEST_CASE("small complete graphs on few planes") {
  for (int n = 4; n <= 8; ++n) {
    auto res = kn_small_plane_cover(n);
    CHECK(res.witness.size() == kn_table_upper(n));
    auto rep = kn_structural_checks(res.drawing, res.witness);
    INFO(n);
    CHECK(rep.ok);
  }
  CHECK_THROWS_AS(kn_small_plane_cover(9), DomainError);
  // u7 lies in the plane of u2, u5, u6; u8 is its mirror image.
  auto u = kn_small_points();
  CHECK(orient(u[1], u[4], u[5], u[6]) == 0);
  CHECK(u[7] == QPoint(u[6][0], -u[6][1], -u[6][2]));
}

TEST_CASE("spiral drawings of track layouts") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Graph t = random_connected_graph(12 + static_cast<int>(seed % 10), 0.0, seed);
    auto res = spiral_two_lines(t, tree_tracks(t, static_cast<int>(seed % 7)));
    CHECK(res.witness.size() <= 2);
    CHECK(min_vertex_line_cover(res.drawing).count <= 2);
  }
  CHECK(spiral_two_lines(family_from_string("path:4"), tree_tracks(family_from_string("path:4"), 0))
            .witness.size() == 2);
  auto star = spiral_two_lines(family_from_string("complete_bipartite:1,3"),
                               tree_tracks(family_from_string("complete_bipartite:1,3"), 0));
  CHECK(star.witness.size() == 2);
  // Two track-0 vertices joined out of order overlap on the axis.
  Graph p3 = family_from_string("path:3");
  TrackAssignment flat{{0, 0, 0}, {0, 2, 1}};
  CHECK_THROWS_AS(spiral_two_lines(p3, flat), ConstructionError);
}

TEST_CASE("binary tree grid recursion") {
  CHECK(binary_tree_m(2) == 2);
  CHECK(binary_tree_m(3) == 4);
  CHECK(binary_tree_m(4) == 8);
  CHECK(binary_tree_m(6) == 20);
  for (int h = 2; h <= 12; ++h) {
    long closed = h % 2 == 0 ? 6 * (1L << ((h - 2) / 2)) - 4 : 8 * (1L << ((h - 3) / 2)) - 4;
    CHECK(binary_tree_m(h) == closed);
  }
  CHECK(binary_tree_grid(0).drawing.points().size() == 1);
  for (int h = 2; h <= 9; ++h) {
    auto res = binary_tree_grid(h);
    long m = binary_tree_m(h), n = res.drawing.graph().n();
    int lines = edge_line_count(res.drawing).count;
    CHECK(res.box[0] <= m + 1);
    CHECK(res.box[1] <= m + 2);
    CHECK(lines <= 2 * m + 1);
    CHECK(static_cast<long>(lines) * lines > n - 3);
  }
}

TEST_CASE("K_{2,q} on the optimal number of lines") {
  for (int q = 1; q <= 20; ++q) {
    auto res = k2q_optimal(q);
    int n = q + 2;
    int expect = (3 * n - 7 + 1) / 2;
    CHECK(edge_line_count(res.drawing).count == expect);
    // Black vertices paired through w or on the w-w' line, white w' alone.
    int via_w = 1 + q / 2, via_w2 = q - 1;
    CHECK(via_w + via_w2 == expect);
  }
  CHECK_THROWS_AS(k2q_optimal(0), DomainError);
}

TEST_CASE("prism stacks in 3D") {
  auto one = prism_stack_3d(1, PrismBase::c4);
  CHECK(one.claimed_bound == 4);
  CHECK(prism_stack_3d(1, PrismBase::c3).claimed_bound == 3);
  for (int k = 2; k <= 30; ++k) {
    CHECK_NOTHROW(prism_stack_3d(k, PrismBase::c4));
    CHECK_NOTHROW(prism_stack_3d(k, PrismBase::c3));
  }
  PrismStats st;
  auto k8 = prism_stack_3d(8, PrismBase::c4, &st);
  CHECK(st.grid == 2);
  CHECK(st.columns * st.height >= 8);
  auto k27 = prism_stack_3d(27, PrismBase::c4);
  double ratio = static_cast<double>(k27.claimed_bound) / k8.claimed_bound;
  double expect = std::pow(108.0 / 32.0, 2.0 / 3.0);
  CHECK(ratio < 2 * expect);
  CHECK(ratio > expect / 2);
}

TEST_CASE("nested squares on two lines") {
  for (int k = 1; k <= 5; ++k) {
    auto res = nested_squares_two_lines(k);
    CHECK(res.drawing.graph().n() == 4 * k);
    CHECK(min_vertex_line_cover(res.drawing).count == 2);
  }
}
