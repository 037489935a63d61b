#include "affcov/drawing.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace affcov {

std::string Violation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::bad_input: os << "bad input"; break;
    case Kind::coincident_points: os << "vertices " << a << " and " << b << " coincide"; break;
    case Kind::vertex_on_edge: os << "vertex " << a << " lies inside edge #" << b; break;
    case Kind::edge_crossing: os << "edges #" << a << " and #" << b << " cross"; break;
  }
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

const VerifiedDrawing& VerifyResult::value() const {
  if (!drawing) throw GeometryError("drawing not verified: " + violation->describe());
  return *drawing;
}

namespace {

struct Box {
  std::array<Rational, 3> lo, hi;
};

Box edge_box(const QPoint& p, const QPoint& q) {
  Box b;
  for (int i = 0; i < 3; ++i) {
    b.lo[i] = std::min<Rational>(p[i], q[i]);
    b.hi[i] = std::max<Rational>(p[i], q[i]);
  }
  return b;
}

bool box_has(const Box& b, const QPoint& p) {
  for (int i = 0; i < 3; ++i)
    if (p[i] < b.lo[i] || p[i] > b.hi[i]) return false;
  return true;
}

bool boxes_meet(const Box& a, const Box& b) {
  for (int i = 0; i < 3; ++i)
    if (a.hi[i] < b.lo[i] || b.hi[i] < a.lo[i]) return false;
  return true;
}

std::string edge_text(const Graph& g, int e) {
  auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

VerifyResult verify_crossing_free(Drawing d) {
  VerifyResult r;
  auto fail = [&](Violation::Kind k, int a, int b, std::string detail) {
    r.violation = Violation{k, a, b, std::move(detail)};
    return r;
  };
  const Graph& g = d.graph;
  const auto& pts = d.points;
  if (static_cast<int>(pts.size()) != g.n())
    return fail(Violation::Kind::bad_input, -1, -1, "point count differs from vertex count");
  for (const auto& p : pts)
    if (p.dim() != pts[0].dim() || (p.dim() != 2 && p.dim() != 3))
      return fail(Violation::Kind::bad_input, -1, -1, "points must share dimension 2 or 3");

  std::vector<int> idx(pts.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return pts[a] < pts[b]; });
  bool dup = false;
  for (std::size_t i = 1; i < idx.size(); ++i) dup = dup || pts[idx[i]] == pts[idx[i - 1]];
  if (dup) {
    for (int a = 0; a < g.n(); ++a)
      for (int b = a + 1; b < g.n(); ++b)
        if (pts[a] == pts[b])
          return fail(Violation::Kind::coincident_points, a, b, pts[a].to_string());
  }

  const auto& edges = g.edges();
  std::vector<Box> boxes;
  boxes.reserve(edges.size());
  for (auto [u, v] : edges) boxes.push_back(edge_box(pts[u], pts[v]));

  for (int v = 0; v < g.n(); ++v) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [a, b] = edges[e];
      if (a == v || b == v || !box_has(boxes[e], pts[v])) continue;
      if (on_segment(pts[v], pts[a], pts[b]))
        return fail(Violation::Kind::vertex_on_edge, v, static_cast<int>(e),
                    "vertex " + std::to_string(v) + " inside " + edge_text(g, static_cast<int>(e)));
    }
  }

  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (!boxes_meet(boxes[i], boxes[j])) continue;
      auto [a, b] = edges[i];
      auto [c, e] = edges[j];
      bool adjacent = a == c || a == e || b == c || b == e;
      auto rel = segments_intersect(pts[a], pts[b], pts[c], pts[e]);
      bool ok = adjacent ? rel == SegmentRelation::shared_endpoint_only
                         : rel == SegmentRelation::disjoint;
      if (!ok)
        return fail(Violation::Kind::edge_crossing, static_cast<int>(i), static_cast<int>(j),
                    edge_text(g, static_cast<int>(i)) + " vs " + edge_text(g, static_cast<int>(j)) +
                        " (" + to_string(rel) + ")");
    }
  }
  r.drawing = VerifiedDrawing(std::move(d));
  return r;
}

// ----------------------------------------------------------------- witness

const char* to_string(CoverKind k) {
  switch (k) {
    case CoverKind::lines_for_edges: return "lines_for_edges";
    case CoverKind::lines_for_vertices: return "lines_for_vertices";
    case CoverKind::planes_for_edges: return "planes_for_edges";
    case CoverKind::planes_for_vertices: return "planes_for_vertices";
    case CoverKind::parallel_lines: return "parallel_lines";
  }
  return "?";
}

CoverKind cover_kind_from_string(const std::string& s) {
  for (auto k : {CoverKind::lines_for_edges, CoverKind::lines_for_vertices,
                 CoverKind::planes_for_edges, CoverKind::planes_for_vertices,
                 CoverKind::parallel_lines})
    if (s == to_string(k)) return k;
  throw ParseError("unknown witness kind '" + s + "'");
}

bool covers_edges(CoverKind k) {
  return k == CoverKind::lines_for_edges || k == CoverKind::planes_for_edges;
}

bool uses_planes(CoverKind k) {
  return k == CoverKind::planes_for_edges || k == CoverKind::planes_for_vertices;
}

bool planes_parallel(const std::vector<CanonPlane>& planes) {
  for (const auto& p : planes)
    if (p.normal != planes[0].normal) return false;
  return true;
}

std::optional<std::string> validate_witness(const Drawing& d, const CoverWitness& w) {
  const Graph& g = d.graph;
  bool edge_items = covers_edges(w.kind);
  std::size_t items = static_cast<std::size_t>(edge_items ? g.m() : g.n());
  if (w.assignment.size() != items) return "assignment size does not match item count";
  if (uses_planes(w.kind) && !w.lines.empty()) return "plane witness carries lines";
  if (!uses_planes(w.kind) && !w.planes.empty()) return "line witness carries planes";
  if (uses_planes(w.kind) && d.dim() != 3) return "plane witness on a 2D drawing";
  for (const auto& l : w.lines)
    if (l.dim != d.dim()) return "line dimension differs from drawing";
  if (w.kind == CoverKind::parallel_lines) {
    for (const auto& l : w.lines)
      if (l.direction != w.lines[0].direction) return "parallel witness with distinct directions";
  }
  auto holds = [&](int obj, int v) {
    return uses_planes(w.kind) ? w.planes[static_cast<std::size_t>(obj)].contains(d.points[v])
                               : w.lines[static_cast<std::size_t>(obj)].contains(d.points[v]);
  };
  for (std::size_t i = 0; i < items; ++i) {
    int obj = w.assignment[i];
    if (obj < 0 || obj >= w.size())
      return "item " + std::to_string(i) + " assigned to missing object " + std::to_string(obj);
    if (edge_items) {
      auto [u, v] = g.edges()[i];
      if (!holds(obj, u) || !holds(obj, v))
        return "edge " + edge_text(g, static_cast<int>(i)) + " not contained in object " +
               std::to_string(obj);
    } else if (!holds(obj, static_cast<int>(i))) {
      return "vertex " + std::to_string(i) + " not contained in object " + std::to_string(obj);
    }
  }
  return std::nullopt;
}

// --------------------------------------------------------------- set cover

namespace {

using Mask = std::uint64_t;

struct CoverSearch {
  std::vector<Mask> sets;
  std::vector<std::vector<int>> containing;  // element -> set ids
  std::vector<int> best;
  std::vector<int> cur;
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
  bool aborted = false;

  void run(Mask unc) {
    if (aborted) return;
    if (++nodes > budget) {
      aborted = true;
      return;
    }
    if (!unc) {
      if (cur.size() < best.size()) best = cur;
      return;
    }
    int widest = 0;
    for (Mask s : sets) widest = std::max(widest, std::popcount(s & unc));
    int lb = (std::popcount(unc) + widest - 1) / widest;
    if (cur.size() + static_cast<std::size_t>(lb) >= best.size()) return;

    int pick = -1;
    std::size_t fewest = SIZE_MAX;
    for (Mask m = unc; m; m &= m - 1) {
      int e = std::countr_zero(m);
      if (containing[e].size() < fewest) {
        fewest = containing[e].size();
        pick = e;
      }
    }
    std::vector<int> order = containing[pick];
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return std::popcount(sets[a] & unc) > std::popcount(sets[b] & unc);
    });
    for (int s : order) {
      cur.push_back(s);
      run(unc & ~sets[s]);
      cur.pop_back();
      if (aborted) return;
    }
  }
};

std::vector<int> greedy_cover(int universe, const std::vector<std::vector<int>>& sets) {
  std::vector<char> covered(static_cast<std::size_t>(universe), 0);
  int left = universe;
  std::vector<int> chosen;
  while (left > 0) {
    int best = -1, gain = 0;
    for (std::size_t s = 0; s < sets.size(); ++s) {
      int g = 0;
      for (int e : sets[s]) g += !covered[e];
      if (g > gain) {
        gain = g;
        best = static_cast<int>(s);
      }
    }
    if (best < 0) throw DomainError("sets do not cover the universe");
    chosen.push_back(best);
    for (int e : sets[best]) {
      if (!covered[e]) --left;
      covered[e] = 1;
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

SetCoverResult set_cover(int universe, const std::vector<std::vector<int>>& sets,
                         std::uint64_t node_budget) {
  SetCoverResult r;
  if (universe == 0) return r;
  std::vector<int> greedy = greedy_cover(universe, sets);
  if (universe > 64) {
    r.chosen = greedy;
    r.exact = false;
    return r;
  }
  std::vector<Mask> masks;
  for (const auto& s : sets) {
    Mask m = 0;
    for (int e : s) m |= Mask{1} << e;
    masks.push_back(m);
  }
  // Keep one representative per maximal set; lowest index wins ties.
  std::vector<int> keep;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (!masks[i]) continue;
    bool dominated = false;
    for (std::size_t j = 0; j < masks.size() && !dominated; ++j) {
      if (i == j || (masks[i] & ~masks[j])) continue;
      dominated = masks[i] != masks[j] || j < i;
    }
    if (!dominated) keep.push_back(static_cast<int>(i));
  }
  CoverSearch cs;
  for (int i : keep) cs.sets.push_back(masks[i]);
  cs.containing.assign(static_cast<std::size_t>(universe), {});
  for (std::size_t s = 0; s < cs.sets.size(); ++s)
    for (Mask m = cs.sets[s]; m; m &= m - 1) cs.containing[std::countr_zero(m)].push_back(static_cast<int>(s));
  cs.budget = node_budget;
  // Incumbent: greedy, one larger so the search can match it.
  cs.best.assign(greedy.size() + 1, -1);
  Mask all = universe == 64 ? ~Mask{0} : (Mask{1} << universe) - 1;
  cs.run(all);
  r.nodes = cs.nodes;
  if (cs.aborted || cs.best.size() > greedy.size()) {
    r.chosen = greedy;
    r.exact = !cs.aborted;
    return r;
  }
  for (int s : cs.best) r.chosen.push_back(keep[s]);
  std::sort(r.chosen.begin(), r.chosen.end());
  return r;
}

// ------------------------------------------------------------ measurements

CoverCount edge_line_count(const VerifiedDrawing& vd) {
  const Drawing& d = vd.drawing();
  std::map<CanonLine, int> lines;
  std::vector<CanonLine> per_edge;
  for (auto [u, v] : d.graph.edges()) {
    per_edge.push_back(canon_line(d.points[u], d.points[v]));
    lines.emplace(per_edge.back(), 0);
  }
  CoverCount c;
  c.witness.kind = CoverKind::lines_for_edges;
  int i = 0;
  for (auto& [l, id] : lines) {
    id = i++;
    c.witness.lines.push_back(l);
  }
  for (const auto& l : per_edge) c.witness.assignment.push_back(lines.at(l));
  c.count = static_cast<int>(lines.size());
  return c;
}

CoverCount min_vertex_line_cover(const VerifiedDrawing& vd, std::uint64_t node_budget) {
  const Drawing& d = vd.drawing();
  int n = d.graph.n();
  std::vector<CanonLine> cand;
  {
    std::set<CanonLine> seen;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) seen.insert(canon_line(d.points[a], d.points[b]));
    cand.assign(seen.begin(), seen.end());
    if (n == 1) cand.push_back(canon_singleton_line(d.points[0]));
  }
  std::vector<std::vector<int>> sets;
  for (const auto& l : cand) {
    sets.emplace_back();
    for (int v = 0; v < n; ++v)
      if (l.contains(d.points[v])) sets.back().push_back(v);
  }
  auto sc = set_cover(n, sets, node_budget);
  CoverCount c;
  c.exact = sc.exact;
  c.count = static_cast<int>(sc.chosen.size());
  c.witness.kind = CoverKind::lines_for_vertices;
  for (int s : sc.chosen) c.witness.lines.push_back(cand[s]);
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < c.count; ++i)
      if (c.witness.lines[i].contains(d.points[v])) {
        c.witness.assignment.push_back(i);
        break;
      }
  }
  return c;
}

CoverCount min_parallel_line_cover(const VerifiedDrawing& vd) {
  const Drawing& d = vd.drawing();
  int n = d.graph.n(), dim = d.dim();
  std::set<std::array<Integer, 3>> dirs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      QPoint diff = d.points[j] - d.points[i];
      std::vector<Rational> v;
      for (int k = 0; k < dim; ++k) v.push_back(diff[k]);
      dirs.insert(primitive_direction(v));
    }
  std::array<Integer, 3> e1{1, 0, 0};
  if (dirs.empty()) dirs.insert(e1);
  CoverCount best;
  best.count = -1;
  for (const auto& dir : dirs) {
    std::vector<Rational> v(dir.begin(), dir.begin() + dim);
    CoverWitness w;
    w.kind = CoverKind::parallel_lines;
    std::map<CanonLine, int> index;
    for (int i = 0; i < n; ++i) {
      auto [it, fresh] = index.emplace(canon_line_through(d.points[i], v), static_cast<int>(index.size()));
      if (fresh) w.lines.push_back(it->first);
      w.assignment.push_back(it->second);
    }
    if (best.count < 0 || w.size() < best.count) {
      best.count = w.size();
      best.witness = std::move(w);
    }
  }
  if (n == 0) best.count = 0;
  return best;
}

CoverCount min_edge_plane_cover(const VerifiedDrawing& vd, std::uint64_t node_budget) {
  const Drawing& d = vd.drawing();
  if (d.dim() != 3) throw GeometryError("plane covers need a 3D drawing");
  const Graph& g = d.graph;
  std::set<CanonPlane> seen;
  for (auto [u, v] : g.edges()) {
    seen.insert(canon_plane_through_segment(d.points[u], d.points[v]));
    for (int w = 0; w < g.n(); ++w)
      if (!collinear(d.points[u], d.points[v], d.points[w]))
        seen.insert(canon_plane(d.points[u], d.points[v], d.points[w]));
  }
  std::vector<CanonPlane> cand(seen.begin(), seen.end());
  std::vector<std::vector<int>> sets;
  for (const auto& pl : cand) {
    std::vector<char> in(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) in[v] = pl.contains(d.points[v]);
    sets.emplace_back();
    for (int e = 0; e < g.m(); ++e) {
      auto [u, v] = g.edges()[e];
      if (in[u] && in[v]) sets.back().push_back(e);
    }
  }
  auto sc = set_cover(g.m(), sets, node_budget);
  CoverCount c;
  c.exact = sc.exact;
  c.count = static_cast<int>(sc.chosen.size());
  c.witness.kind = CoverKind::planes_for_edges;
  for (int s : sc.chosen) c.witness.planes.push_back(cand[s]);
  for (auto [u, v] : g.edges()) {
    for (int i = 0; i < c.count; ++i) {
      const auto& pl = c.witness.planes[i];
      if (pl.contains(d.points[u]) && pl.contains(d.points[v])) {
        c.witness.assignment.push_back(i);
        break;
      }
    }
  }
  return c;
}

SegmentSlopeCount segment_slope_count(const VerifiedDrawing& vd) {
  const Drawing& d = vd.drawing();
  const Graph& g = d.graph;
  std::map<CanonLine, std::vector<int>> by_line;
  std::set<std::array<Integer, 3>> dirs;
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges()[e];
    CanonLine l = canon_line(d.points[u], d.points[v]);
    dirs.insert(l.direction);
    by_line[l].push_back(e);
  }
  std::vector<int> parent(static_cast<std::size_t>(g.n()));
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  SegmentSlopeCount r;
  r.slopes = static_cast<int>(dirs.size());
  for (const auto& [l, es] : by_line) {
    std::iota(parent.begin(), parent.end(), 0);
    std::set<int> verts;
    for (int e : es) {
      auto [u, v] = g.edges()[e];
      parent[find(u)] = find(v);
      verts.insert(u);
      verts.insert(v);
    }
    std::set<int> roots;
    for (int v : verts) roots.insert(find(v));
    r.segments += static_cast<int>(roots.size());
  }
  return r;
}

namespace {

QPoint project_along(const QPoint& p, const CanonPlane& pl) {
  int k = 0;
  while (pl.normal[k] == 0) ++k;
  std::array<Rational, 2> c;
  int j = 0;
  for (int i = 0; i < 3; ++i)
    if (i != k) c[j++] = p[i];
  return QPoint(c[0], c[1]);
}

bool strictly_inside(const QPoint& p, const QPoint& a, const QPoint& b, const QPoint& c) {
  int o1 = orient(a, b, p), o2 = orient(b, c, p), o3 = orient(c, a, p);
  return o1 != 0 && o1 == o2 && o2 == o3;
}

}  // namespace

StructuralReport kn_structural_checks(const VerifiedDrawing& vd, const CoverWitness& w) {
  const Drawing& d = vd.drawing();
  StructuralReport r;
  auto problem = [&](std::string s) {
    r.ok = false;
    r.problems.push_back(std::move(s));
  };
  if (!is_complete(d.graph)) problem("drawing is not of a complete graph");
  if (w.kind != CoverKind::planes_for_edges) problem("witness is not a planes_for_edges cover");
  if (auto err = validate_witness(d, w)) problem("witness invalid: " + *err);
  if (!r.ok) return r;

  std::vector<std::set<int>> assigned(w.planes.size());
  for (int e = 0; e < d.graph.m(); ++e) {
    auto [u, v] = d.graph.edges()[e];
    assigned[w.assignment[e]].insert(u);
    assigned[w.assignment[e]].insert(v);
  }
  std::vector<std::size_t> quads;
  for (std::size_t i = 0; i < w.planes.size(); ++i) {
    int on = 0;
    for (const auto& p : d.points) on += w.planes[i].contains(p);
    if (on >= 5) problem("plane " + std::to_string(i) + " holds " + std::to_string(on) + " vertices");
    if (assigned[i].size() != 4) continue;
    quads.push_back(i);
    std::vector<QPoint> q;
    for (int v : assigned[i]) q.push_back(project_along(d.points[v], w.planes[i]));
    bool inner = false;
    for (int k = 0; k < 4 && !inner; ++k) {
      std::vector<QPoint> rest;
      for (int j = 0; j < 4; ++j)
        if (j != k) rest.push_back(q[j]);
      inner = strictly_inside(q[k], rest[0], rest[1], rest[2]);
    }
    if (!inner) {
      std::string vs;
      for (int v : assigned[i]) vs += " " + std::to_string(v);
      problem("plane " + std::to_string(i) + " has 4 vertices in convex position:" + vs);
    }
  }
  for (std::size_t a = 0; a < quads.size(); ++a)
    for (std::size_t b = a + 1; b < quads.size(); ++b) {
      int common = 0;
      for (int v : assigned[quads[a]]) common += assigned[quads[b]].count(v) ? 1 : 0;
      if (common >= 3)
        problem("planes " + std::to_string(quads[a]) + " and " + std::to_string(quads[b]) +
                " share " + std::to_string(common) + " vertices");
    }
  return r;
}

bool ess_a_holds(int lines, int es) {
  long long t = 2LL * lines - 1;
  return t > 0 && t * t > 1 + 8LL * es;
}

bool ess_b_holds(int lines, int n, int m) {
  if (!(m >= n && n >= 1)) return true;
  long long r = lines;
  return r * r * n > static_cast<long long>(m) * m - static_cast<long long>(m) * n;
}

}  // namespace affcov
