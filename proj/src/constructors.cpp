#include "affcov/constructors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

namespace affcov {

namespace {

Rational R(long v) { return Rational(v); }

QPoint P2(const Rational& x, const Rational& y) { return QPoint(x, y); }
QPoint P3(const Rational& x, const Rational& y, const Rational& z) { return QPoint(x, y, z); }

std::vector<Integer> bounding_box(const std::vector<QPoint>& pts) {
  if (pts.empty()) return {};
  int dim = pts[0].dim();
  std::vector<Integer> box;
  for (int i = 0; i < dim; ++i) {
    Rational lo = pts[0][i], hi = pts[0][i];
    for (const auto& p : pts) {
      lo = std::min<Rational>(lo, p[i]);
      hi = std::max<Rational>(hi, p[i]);
    }
    Rational ext = hi - lo;
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), ext.get_num_mpz_t(), ext.get_den_mpz_t());
    box.push_back(c + 1);
  }
  return box;
}

// Orders the vertices of a linear-forest class path by path.
std::vector<int> linear_forest_order(const Graph& g, const std::vector<int>& cls) {
  std::vector<char> in(static_cast<std::size_t>(g.n()), 0), seen(static_cast<std::size_t>(g.n()), 0);
  for (int v : cls) in[v] = 1;
  auto inner = [&](int v) {
    std::vector<int> out;
    for (int w : g.neighbors(v))
      if (in[w]) out.push_back(w);
    return out;
  };
  std::vector<int> order;
  std::vector<int> sorted = cls;
  std::sort(sorted.begin(), sorted.end());
  for (int v : sorted) {
    if (seen[v] || inner(v).size() > 1) continue;
    int prev = -1, cur = v;
    while (cur >= 0) {
      seen[cur] = 1;
      order.push_back(cur);
      int next = -1;
      for (int w : inner(cur))
        if (w != prev && !seen[w]) next = w;
      prev = cur;
      cur = next;
    }
  }
  if (order.size() != cls.size()) throw ConstructionError("class is not a linear forest");
  return order;
}

}  // namespace

ConstructionResult finish_construction(Drawing d, CoverWitness w, int claimed_bound, bool optimal) {
  auto box = bounding_box(d.points);
  std::string meta = d.meta;
  VerifyResult vr = verify_crossing_free(std::move(d));
  if (!vr.ok())
    throw ConstructionError(meta + ": drawing not crossing-free: " + vr.violation->describe(),
                            vr.violation);
  if (auto err = validate_witness(vr.drawing->drawing(), w))
    throw ConstructionError(meta + ": witness invalid: " + *err);
  if (w.size() > claimed_bound)
    throw ConstructionError(meta + ": witness uses " + std::to_string(w.size()) +
                            " objects, claimed " + std::to_string(claimed_bound));
  return ConstructionResult{*std::move(vr.drawing), std::move(w), claimed_bound, std::move(box),
                            optimal, 0, 0};
}

CoverWitness vertex_line_witness(const std::vector<QPoint>& points,
                                 const std::vector<std::vector<int>>& groups, CoverKind kind,
                                 const std::vector<Rational>& direction) {
  CoverWitness w;
  w.kind = kind;
  w.assignment.assign(points.size(), -1);
  for (const auto& grp : groups) {
    if (grp.empty()) continue;
    const QPoint& a = points[grp[0]];
    if (!direction.empty()) w.lines.push_back(canon_line_through(a, direction));
    else if (grp.size() == 1) w.lines.push_back(canon_singleton_line(a));
    else w.lines.push_back(canon_line(a, points[grp[1]]));
    for (int v : grp) w.assignment[v] = static_cast<int>(w.lines.size()) - 1;
  }
  return w;
}

int pach_prime(int r) {
  auto prime = [](int x) {
    if (x < 2) return false;
    for (int d = 2; d * d <= x; ++d)
      if (x % d == 0) return false;
    return true;
  };
  int p = std::max(2, 2 * r - 1);
  while (!prime(p)) ++p;
  return p;
}

namespace {

// Points of class i of the host drawing: (i, t, i t) for t = i^2 mod p,
// i^2 mod p + p, ...
QPoint pach_point(int i, int j, int p) {
  long t = static_cast<long>(i) * i % p + static_cast<long>(j) * p;
  return QPoint::from_ints({i, t, static_cast<long>(i) * t});
}

CanonLine pach_line(int i) {
  std::vector<Rational> dir = {R(0), R(1), R(i)};
  return canon_line_through(QPoint::from_ints({i, 0, 0}), dir);
}

}  // namespace

ConstructionResult pach_multipartite(int r, int n, bool join_classes) {
  if (r < 2) throw DomainError("pach_multipartite needs r >= 2");
  if (n < r || n % r != 0) throw DomainError("pach_multipartite needs r | n");
  int p = pach_prime(r), size = n / r;
  Graph base = build_family({FamilyKind::balanced_multipartite, {r, n}});
  std::vector<Edge> edges = base.edges();
  std::vector<QPoint> pts;
  CoverWitness w;
  w.kind = CoverKind::lines_for_vertices;
  for (int i = 0; i < r; ++i) {
    w.lines.push_back(pach_line(i));
    for (int j = 0; j < size; ++j) {
      pts.push_back(pach_point(i, j, p));
      w.assignment.push_back(i);
      if (join_classes && j + 1 < size) edges.emplace_back(i * size + j, i * size + j + 1);
    }
  }
  Drawing d{Graph(n, edges), std::move(pts), "pach_multipartite:" + std::to_string(r) + "," +
                                                 std::to_string(n)};
  return finish_construction(std::move(d), std::move(w), r);
}

ConstructionResult pi13_drawing(const Graph& g, const Budget& b) {
  PartitionResult part = lva_exact(g, b);
  int r = static_cast<int>(part.partition.classes.size());
  int n = g.n();
  int p = pach_prime(std::max(r, 1));
  std::vector<QPoint> pts(static_cast<std::size_t>(n));
  CoverWitness w;
  w.kind = CoverKind::lines_for_vertices;
  w.assignment.assign(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < r; ++i) {
    w.lines.push_back(pach_line(i));
    auto order = linear_forest_order(g, part.partition.classes[i]);
    for (std::size_t j = 0; j < order.size(); ++j) {
      pts[order[j]] = pach_point(i, static_cast<int>(j), p);
      w.assignment[order[j]] = i;
    }
  }
  Drawing d{g, std::move(pts), "pi13"};
  return finish_construction(std::move(d), std::move(w), r, part.exact);
}

ConstructionResult pi23_drawing(const Graph& g, const Pi23Options& opt, const Budget& b) {
  PartitionResult part = vertex_thickness_exact(g, b);
  const auto& classes = part.partition.classes;
  int r = static_cast<int>(classes.size());
  int n = g.n();

  // Plane drawing of each class, in local indices.
  std::vector<Drawing> local;
  for (const auto& cls : classes) local.push_back(grid_drawing_any(induced_subgraph(g, cls)));

  CoverWitness w;
  w.kind = CoverKind::planes_for_vertices;
  w.assignment.assign(static_cast<std::size_t>(n), -1);
  std::vector<Rational> up = {R(0), R(0), R(1)};
  for (int i = 0; i < r; ++i) {
    w.planes.push_back(canon_plane_with_normal(QPoint::from_ints({0, 0, i}), up));
    for (int v : classes[i]) w.assignment[v] = i;
  }

  std::mt19937_64 rng(opt.seed);
  long m = std::max(2, g.m());
  long c1 = 1, c2 = 1;
  std::optional<Violation> last;
  for (int attempt = 0; attempt < opt.retry_cap; ++attempt) {
    long s = std::max(2L, c1 * m * m), t = std::max(2L, c2 * m);
    std::vector<QPoint> pts(static_cast<std::size_t>(n));
    for (int i = 0; i < r; ++i) {
      long a = 1, bb = 0, px = 0, py = 0;
      if (r > 1) {
        do {
          a = 2 + static_cast<long>(uniform_below(rng(), static_cast<std::uint64_t>(t - 1)));
          bb = 1 + static_cast<long>(uniform_below(rng(), static_cast<std::uint64_t>(a - 1)));
        } while (std::gcd(a, bb) != 1);
        px = static_cast<long>(uniform_below(rng(), static_cast<std::uint64_t>(s)));
        py = static_cast<long>(uniform_below(rng(), static_cast<std::uint64_t>(s)));
      }
      for (std::size_t j = 0; j < classes[i].size(); ++j) {
        const QPoint& q = local[i].points[j];
        Rational x = a * q[0] - bb * q[1] + px, y = bb * q[0] + a * q[1] + py;
        pts[classes[i][j]] = P3(x, y, R(i));
      }
    }
    Drawing d{g, std::move(pts), "pi23"};
    try {
      auto res = finish_construction(std::move(d), w, r, part.exact);
      res.retries = attempt;
      res.seed = opt.seed;
      return res;
    } catch (const ConstructionError& e) {
      last = e.violation;
      if (!last) throw;
    }
    if (c1 < (1L << 20)) c1 *= 2, c2 *= 2;
  }
  throw ConstructionError("pi23: retry cap exhausted; last violation: " +
                              (last ? last->describe() : std::string("none")),
                          last);
}

ConstructionResult moment_curve_kn(int n) {
  if (n < 1) throw DomainError("moment_curve_kn needs n >= 1");
  std::vector<QPoint> pts;
  std::vector<std::vector<int>> pairs;
  for (long t = 0; t < n; ++t) {
    pts.push_back(QPoint::from_ints({t, t * t, t * t * t}));
    if (t % 2 == 0) pairs.push_back({static_cast<int>(t)});
    else pairs.back().push_back(static_cast<int>(t));
  }
  auto w = vertex_line_witness(pts, pairs);
  Drawing d{build_family({FamilyKind::complete, {n}}), std::move(pts), "moment_curve:" + std::to_string(n)};
  return finish_construction(std::move(d), std::move(w), (n + 1) / 2);
}

ConstructionResult kpq_plane_book(int p, int q) {
  Graph g = build_family({FamilyKind::complete_bipartite, {p, q}});
  std::vector<QPoint> pts(static_cast<std::size_t>(p + q));
  // The q side sits on the x-axis; pairs of the p side share a plane
  // through that axis, one on each side of it.
  for (int j = 0; j < q; ++j) pts[p + j] = QPoint::from_ints({j, 0, 0});
  CoverWitness w;
  w.kind = CoverKind::planes_for_edges;
  for (int i = 0; i < p; ++i) {
    long k = i / 2, s = i % 2 ? -1 : 1;
    pts[i] = QPoint::from_ints({0, s, s * k});
    if (i % 2 == 0)
      w.planes.push_back(canon_plane(QPoint::from_ints({0, 0, 0}), QPoint::from_ints({1, 0, 0}), pts[i]));
  }
  for (auto [u, v] : g.edges()) w.assignment.push_back(u / 2);
  Drawing d{g, std::move(pts), "kpq_plane_book:" + std::to_string(p) + "," + std::to_string(q)};
  return finish_construction(std::move(d), std::move(w), (p + 1) / 2);
}

std::vector<QPoint> kn_small_points() {
  std::vector<QPoint> u = {
      QPoint::from_ints({0, 0, 0}), QPoint::from_ints({4, 2, 0}),  QPoint::from_ints({4, -2, 0}),
      QPoint::from_ints({2, 0, 0}), QPoint::from_ints({5, 0, 2}),  QPoint::from_ints({5, 0, -2})};
  // u7 strictly inside the triangle u2 u5 u6; u8 its image under the half
  // turn about the x-axis.
  QPoint u7 = u[1].scaled(Rational(1, 2)) + u[4].scaled(Rational(1, 3)) + u[5].scaled(Rational(1, 6));
  u.push_back(u7);
  u.push_back(P3(u7[0], -u7[1], -u7[2]));
  return u;
}

int kn_table_upper(int n) {
  static const int table[] = {1, 3, 4, 6, 7};
  if (n < 4 || n > 8) throw DomainError("table covers 4 <= n <= 8");
  return table[n - 4];
}

ConstructionResult kn_small_plane_cover(int n) {
  int claimed = kn_table_upper(n);
  auto all = kn_small_points();
  std::vector<QPoint> pts(all.begin(), all.begin() + n);
  Drawing d{build_family({FamilyKind::complete, {n}}), pts, "kn_small:" + std::to_string(n)};
  VerifyResult vr = verify_crossing_free(d);
  if (!vr.ok()) throw ConstructionError("kn_small: " + vr.violation->describe(), vr.violation);
  auto cover = min_edge_plane_cover(vr.value());
  return finish_construction(std::move(d), std::move(cover.witness), claimed);
}

ConstructionResult spiral_two_lines(const Graph& g, const TrackAssignment& tracks) {
  int n = g.n();
  if (static_cast<int>(tracks.track_of.size()) != n || static_cast<int>(tracks.order.size()) != n)
    throw DomainError("track assignment size does not match the graph");
  if (auto err = check_tracks(g, tracks)) throw DomainError("invalid tracks: " + *err);
  int T = tracks.tracks();
  std::vector<std::vector<int>> members(static_cast<std::size_t>(T));
  for (int v = 0; v < n; ++v) members[tracks.track_of[v]].push_back(v);
  std::vector<QPoint> pts(static_cast<std::size_t>(n));
  long next[4] = {1, 1, 1, 1};
  std::vector<std::vector<int>> groups(2);
  for (int i = 0; i < T; ++i) {
    auto& mem = members[i];
    std::sort(mem.begin(), mem.end(),
              [&](int a, int b) { return tracks.order[a] < tracks.order[b]; });
    int h = i % 4;
    for (int v : mem) {
      long pos = next[h]++;
      long sign = h < 2 ? 1 : -1;
      pts[v] = h % 2 == 0 ? QPoint::from_ints({sign * pos, 0}) : QPoint::from_ints({0, sign * pos});
      groups[h % 2].push_back(v);
    }
  }
  // A lone point on the y-axis still needs that axis as its line.
  CoverWitness w;
  w.kind = CoverKind::lines_for_vertices;
  w.assignment.assign(static_cast<std::size_t>(n), -1);
  const std::vector<Rational> dirs[2] = {{R(1), R(0)}, {R(0), R(1)}};
  for (int a = 0; a < 2; ++a) {
    if (groups[a].empty()) continue;
    w.lines.push_back(canon_line_through(QPoint::from_ints({0, 0}), dirs[a]));
    for (int v : groups[a]) w.assignment[v] = static_cast<int>(w.lines.size()) - 1;
  }
  int used = static_cast<int>(w.lines.size());
  Drawing d{g, std::move(pts), "spiral_two_lines"};
  return finish_construction(std::move(d), std::move(w), used);
}

ConstructionResult parallel_kpq_lines(int p, int q) {
  Graph g = build_family({FamilyKind::complete_bipartite, {p, q}});
  std::vector<QPoint> pts(static_cast<std::size_t>(p + q));
  std::vector<std::vector<int>> groups;
  groups.emplace_back();
  for (int j = 0; j < q; ++j) {
    pts[p + j] = QPoint::from_ints({0, 0, j});
    groups[0].push_back(p + j);
  }
  for (int i = 0; i < p; ++i) {
    pts[i] = QPoint::from_ints({1, i, 0});
    groups.push_back({i});
  }
  auto w = vertex_line_witness(pts, groups, CoverKind::parallel_lines, {R(0), R(0), R(1)});
  Drawing d{g, std::move(pts), "parallel_kpq_lines:" + std::to_string(p) + "," + std::to_string(q)};
  return finish_construction(std::move(d), std::move(w), p + 1);
}

long binary_tree_m(int h) {
  if (h < 0) throw DomainError("height must be >= 0");
  if (h <= 1) return h;
  if (h == 2) return 2;
  if (h == 3) return 4;
  return 2 * binary_tree_m(h - 2) + 4;
}

namespace {

void place_tree(std::vector<QPoint>& pts, int v, int h, long x, long y) {
  pts[v] = QPoint::from_ints({x, y});
  if (h == 0) return;
  int c1 = 2 * v + 1, c2 = 2 * v + 2;
  if (h == 1) {
    pts[c1] = QPoint::from_ints({x + 1, y});
    pts[c2] = QPoint::from_ints({x, y + 1});
    return;
  }
  // Reserved width X and height Y of each grandchild subtree.
  long X = h - 2 >= 2 ? binary_tree_m(h - 2) : h - 2;
  long Y = h - 2 >= 2 ? X + 1 : h - 2;
  pts[c1] = QPoint::from_ints({x + 1, y});
  pts[c2] = QPoint::from_ints({x, y + Y + 2});
  place_tree(pts, 2 * c1 + 1, h - 2, x + X + 2, y);
  place_tree(pts, 2 * c1 + 2, h - 2, x + 1, y + 1);
  place_tree(pts, 2 * c2 + 1, h - 2, x + X + 1, y + Y + 2);
  place_tree(pts, 2 * c2 + 2, h - 2, x, y + Y + 3);
}

}  // namespace

ConstructionResult binary_tree_grid(int h) {
  Graph g = build_family({FamilyKind::complete_binary_tree, {h}});
  std::vector<QPoint> pts(static_cast<std::size_t>(g.n()));
  place_tree(pts, 0, h, 0, 0);
  Drawing d{g, std::move(pts), "binary_tree_grid:" + std::to_string(h)};
  VerifyResult vr = verify_crossing_free(d);
  if (!vr.ok()) throw ConstructionError("binary_tree_grid: " + vr.violation->describe(), vr.violation);
  auto lines = edge_line_count(vr.value());
  int claimed = h >= 2 ? static_cast<int>(2 * binary_tree_m(h) + 1) : lines.count;
  return finish_construction(std::move(d), std::move(lines.witness), claimed);
}

ConstructionResult k2q_optimal(int q) {
  if (q < 1) throw DomainError("k2q_optimal needs q >= 1");
  // K_{2,q} with the two white vertices first; q = 1 is allowed here.
  std::vector<Edge> edges;
  for (int b = 2; b < q + 2; ++b) edges.insert(edges.end(), {{0, b}, {1, b}});
  Graph g(q + 2, edges);
  std::vector<QPoint> pts(static_cast<std::size_t>(q + 2));
  // w and w' on a line through the first black vertex.
  pts[0] = QPoint::from_ints({0, 0});
  pts[1] = QPoint::from_ints({-2, 4});
  pts[2] = QPoint::from_ints({-1, 2});
  // Remaining blacks in pairs on lines through w: one on y = x + 1, its
  // partner on x = -1.
  for (int j = 3, t = 1; j < q + 2; j += 2, ++t) {
    pts[j] = QPoint::from_ints({t, 1 + t});
    if (j + 1 < q + 2) pts[j + 1] = P2(R(-1), -Rational(1 + t, t));
  }
  Drawing d{g, std::move(pts), "k2q_optimal:" + std::to_string(q)};
  VerifyResult vr = verify_crossing_free(d);
  if (!vr.ok()) throw ConstructionError("k2q_optimal: " + vr.violation->describe(), vr.violation);
  auto lines = edge_line_count(vr.value());
  int n = q + 2;
  return finish_construction(std::move(d), std::move(lines.witness), (3 * n - 7 + 1) / 2);
}

ConstructionResult prism_stack_3d(int k, PrismBase base, PrismStats* stats) {
  if (k < 1) throw DomainError("prism_stack_3d needs k >= 1");
  static const long c4[4][2] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  static const long c3[3][2] = {{0, 0}, {1, 0}, {0, 1}};
  int corners = base == PrismBase::c4 ? 4 : 3;
  const long(*shape)[2] = base == PrismBase::c4 ? c4 : c3;
  Graph g = build_family({base == PrismBase::c4 ? FamilyKind::c4_prism_stack : FamilyKind::nested_triangles, {k}});

  int grid = 1;
  while (grid * grid * grid < k) ++grid;
  // Single-square columns would put consecutive connecting prisms side by
  // side at the same heights.
  int height = std::max(std::min(k, 2), (k + grid * grid - 1) / (grid * grid));
  int columns = (k + height - 1) / height;

  // Columns run boustrophedon over a grid x grid layout. Neighbouring
  // columns are offset sideways by one unit and alternate direction, so
  // every step to the next column moves diagonally and its connecting edges
  // miss the vertical edges of both columns.
  std::vector<QPoint> pts(static_cast<std::size_t>(g.n()));
  for (int j = 0; j < k; ++j) {
    int c = j / height, i = j % height;
    int row = c / grid, a = row % 2 == 0 ? c % grid : grid - 1 - c % grid;
    long X = 2L * a + row % 2, Y = 4L * row + a % 2;
    long z = c % 2 == 0 ? i : height - i;
    for (int v = 0; v < corners; ++v)
      pts[static_cast<std::size_t>(j * corners + v)] = QPoint::from_ints({X + shape[v][0], Y + shape[v][1], z});
  }
  if (stats) *stats = PrismStats{columns, height, grid};
  Drawing d{g, std::move(pts),
            std::string(base == PrismBase::c4 ? "prism_stack_3d:c4:" : "prism_stack_3d:c3:") + std::to_string(k)};
  VerifyResult vr = verify_crossing_free(d);
  if (!vr.ok()) throw ConstructionError("prism_stack_3d: " + vr.violation->describe(), vr.violation);
  auto lines = edge_line_count(vr.value());
  int count = lines.count;
  return finish_construction(std::move(d), std::move(lines.witness), count);
}

ConstructionResult nested_squares_two_lines(int k) {
  Graph g = build_family({FamilyKind::nested_squares, {k}});
  static const long sx[4] = {1, -1, -1, 1}, sy[4] = {1, 1, -1, -1};
  std::vector<QPoint> pts(static_cast<std::size_t>(4 * k));
  std::vector<std::vector<int>> groups(2);
  for (int j = 0; j < k; ++j)
    for (int c = 0; c < 4; ++c) {
      long r = j + 1;
      pts[4 * j + c] = QPoint::from_ints({sx[c] * r, sy[c] * r});
      groups[c % 2].push_back(4 * j + c);
    }
  auto w = vertex_line_witness(pts, groups);
  Drawing d{g, std::move(pts), "nested_squares_two_lines:" + std::to_string(k)};
  return finish_construction(std::move(d), std::move(w), 2);
}

ConstructionResult kn_triangle_planes(int n, const Budget& b) {
  if (n < 3) throw DomainError("kn_triangle_planes needs n >= 3");
  auto cover = clique_cover_exact(n, 3, b.nodes);
  Drawing d = moment_curve_kn(n).drawing.drawing();
  d.meta = "kn_triangles:" + std::to_string(n);
  CoverWitness w;
  w.kind = CoverKind::planes_for_edges;
  for (const auto& blk : cover.cover.blocks) {
    if (blk.size() >= 3)
      w.planes.push_back(canon_plane(d.points[blk[0]], d.points[blk[1]], d.points[blk[2]]));
    else
      w.planes.push_back(canon_plane_through_segment(d.points[blk[0]], d.points[blk[1]]));
  }
  for (auto [u, v] : d.graph.edges()) {
    int at = -1;
    for (std::size_t i = 0; i < cover.cover.blocks.size() && at < 0; ++i) {
      const auto& blk = cover.cover.blocks[i];
      if (std::count(blk.begin(), blk.end(), u) && std::count(blk.begin(), blk.end(), v))
        at = static_cast<int>(i);
    }
    w.assignment.push_back(at);
  }
  int size = w.size();
  return finish_construction(std::move(d), std::move(w), size);
}

namespace {

int labelled_param(const Graph& g, FamilyKind kind, int step) {
  if (g.n() % step) return -1;
  int k = g.n() / step;
  try {
    if (build_family({kind, {k}}) == g) return k;
  } catch (const DomainError&) {
  }
  return -1;
}

}  // namespace

const std::vector<std::string>& target_names() {
  static const std::vector<std::string> names = {"pi13", "pi23", "rho23_kn", "rho23_kpq", "two_lines",
                                                 "parallel_kpq", "binary_tree", "k2q", "prism3d", "nested_squares"};
  return names;
}

ConstructionResult build_target(const Graph& g, const std::string& target, std::uint64_t seed, const Budget& b) {
  auto sides = complete_bipartite_sides(g);
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw DomainError("target " + target + " needs " + what);
  };
  ConstructionResult r = [&]() -> ConstructionResult {
    if (target == "pi13") return pi13_drawing(g, b);
    if (target == "pi23") return pi23_drawing(g, {seed, 64}, b);
    if (target == "rho23_kn") {
      need(is_complete(g) && g.n() >= 3 && g.n() <= 13, "K_n with 3 <= n <= 13");
      return g.n() >= 4 && g.n() <= 8 ? kn_small_plane_cover(g.n()) : kn_triangle_planes(g.n(), b);
    }
    if (target == "rho23_kpq") {
      need(sides.has_value(), "a complete bipartite graph");
      return kpq_plane_book(sides->first, sides->second);
    }
    if (target == "parallel_kpq") {
      need(sides.has_value(), "a complete bipartite graph");
      return parallel_kpq_lines(sides->first, sides->second);
    }
    if (target == "k2q") {
      need(sides && sides->first == 2, "K_{2,q}");
      return k2q_optimal(sides->second);
    }
    if (target == "two_lines") {
      need(is_tree(g), "a tree");
      return spiral_two_lines(g, tree_tracks(g, 0));
    }
    if (target == "binary_tree") {
      for (int h = 0; h <= 20; ++h)
        if ((1 << (h + 1)) - 1 == g.n() && build_family({FamilyKind::complete_binary_tree, {h}}) == g)
          return binary_tree_grid(h);
      need(false, "complete_binary_tree:h");
    }
    if (target == "prism3d") {
      if (int k = labelled_param(g, FamilyKind::c4_prism_stack, 4); k > 0) return prism_stack_3d(k, PrismBase::c4);
      if (int k = labelled_param(g, FamilyKind::nested_triangles, 3); k > 0) return prism_stack_3d(k, PrismBase::c3);
      need(false, "c4xp:k or nested_triangles:k");
    }
    if (target == "nested_squares") {
      int k = labelled_param(g, FamilyKind::nested_squares, 4);
      need(k > 0, "nested_squares:k");
      return nested_squares_two_lines(k);
    }
    throw DomainError("unknown target " + target);
  }();
  need(r.drawing.graph() == g, "the family's own vertex numbering");
  return r;
}

}  // namespace affcov
