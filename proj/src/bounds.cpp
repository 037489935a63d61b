#include "affcov/bounds.hpp"

#include <algorithm>
#include <map>

namespace affcov {

namespace {

const char* const kParamNames[kParamCount] = {"pi12", "pi13", "pibar13", "pi23", "rho12", "rho13", "rho23"};

long ceil_div(long a, long b) { return (a + b - 1) / b; }

// Smallest r with r(r-1)/2 >= es.
long ess_a_lower(long es) {
  long r = 0;
  while (r * (r - 1) / 2 < es) ++r;
  return r;
}

// Smallest r with r^2 n > m^2 - m n.
long ess_b_lower(long n, long m) {
  long r = 0;
  while (r * r * n <= m * m - m * n) ++r;
  return r;
}

std::string rule_for(const ConstructionResult& r) {
  const std::string& meta = r.drawing.drawing().meta;
  if (meta.rfind("spiral", 0) == 0) return "L13";
  if (meta.rfind("kn_triangles", 0) == 0) return "L10";
  return "L14";
}

void grid_constructions(const Graph& g, std::vector<ConstructionResult>& out) {
  Drawing d = grid_drawing_any(g);
  d.meta = "grid";
  VerifyResult vr = verify_crossing_free(d);
  if (!vr.ok()) return;
  bool isolated = false;
  for (int v = 0; v < g.n(); ++v) isolated = isolated || g.degree(v) == 0;
  if (g.m() > 0 && !isolated) {
    auto lines = edge_line_count(vr.value());
    out.push_back(finish_construction(d, std::move(lines.witness), lines.count));
  }
  if (g.n() <= 40) {
    auto cover = min_vertex_line_cover(vr.value());
    out.push_back(finish_construction(d, std::move(cover.witness), cover.count, cover.exact));
  }
}

template <class F>
void attempt(F f) {
  try {
    f();
  } catch (const ConstructionError&) {
  } catch (const DomainError&) {
  }
}

}  // namespace

const char* to_string(Param p) { return kParamNames[static_cast<int>(p)]; }

Param param_from_string(const std::string& s) {
  for (Param p : kAllParams)
    if (s == to_string(p)) return p;
  throw ParseError("unknown parameter: " + s);
}

const char* to_string(Trust t) {
  return t == Trust::machine_verified ? "machine-verified" : "asserted";
}

void BoundReport::add(BoundEntry e) {
  ParamBounds& pb = (*this)[e.param];
  if (!pb.defined) return;
  if (e.is_lower) {
    pb.lower = std::max(pb.lower, e.value);
    if (e.trust == Trust::machine_verified) pb.verified_lower = std::max(pb.verified_lower, e.value);
  } else if (!pb.upper || e.value < *pb.upper) {
    pb.upper = e.value;
  }
  entries.push_back(std::move(e));
}

const std::vector<std::string>& implemented_rules() {
  static const std::vector<std::string> rules = {"base", "L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8",
                                                 "L9", "L10", "L11", "L12", "L13", "L14", "L15", "Tk"};
  return rules;
}

int kn_table_lower(int n) {
  static const int table[] = {1, 3, 4, 6, 6, 7};
  if (n < 4 || n > 9) throw DomainError("table covers 4 <= n <= 9");
  return table[n - 4];
}

std::optional<Param> certified_param(const ConstructionResult& r) {
  const Graph& g = r.drawing.graph();
  int dim = r.drawing.dim();
  bool isolated = false;
  for (int v = 0; v < g.n(); ++v) isolated = isolated || g.degree(v) == 0;
  switch (r.witness.kind) {
    case CoverKind::lines_for_edges:
      if (isolated) return std::nullopt;
      return dim == 2 ? Param::rho12 : Param::rho13;
    case CoverKind::lines_for_vertices:
      return dim == 2 ? Param::pi12 : Param::pi13;
    case CoverKind::planes_for_edges:
      if (isolated) return std::nullopt;
      return Param::rho23;
    case CoverKind::planes_for_vertices:
      return Param::pi23;
    case CoverKind::parallel_lines:
      return dim == 2 ? Param::pi12 : Param::pibar13;
  }
  return std::nullopt;
}

std::vector<ConstructionResult> standard_constructions(const Graph& g, const Budget& b) {
  std::vector<ConstructionResult> out;
  int n = g.n();
  if (n == 0) return out;
  attempt([&] { out.push_back(pi13_drawing(g, b)); });
  if (n <= 30) attempt([&] { out.push_back(pi23_drawing(g, {}, b)); });
  if (is_planar(g)) attempt([&] { grid_constructions(g, out); });
  if (is_tree(g)) attempt([&] { out.push_back(spiral_two_lines(g, tree_tracks(g, 0))); });
  if (is_complete(g)) {
    attempt([&] { out.push_back(moment_curve_kn(n)); });
    if (n >= 4 && n <= 8) attempt([&] { out.push_back(kn_small_plane_cover(n)); });
    if (n >= 3 && n <= 13) attempt([&] { out.push_back(kn_triangle_planes(n, b)); });
  }
  if (auto pq = complete_bipartite_sides(g)) {
    auto [p, q] = *pq;
    attempt([&] { out.push_back(kpq_plane_book(p, q)); });
    attempt([&] { out.push_back(parallel_kpq_lines(p, q)); });
    if (p == 2) attempt([&] { out.push_back(k2q_optimal(q)); });
  }
  auto labelled = [&](FamilyKind kind, int param) {
    try {
      return build_family({kind, {param}}) == g;
    } catch (const DomainError&) {
      return false;
    }
  };
  if (n % 4 == 0 && labelled(FamilyKind::nested_squares, n / 4))
    attempt([&] { out.push_back(nested_squares_two_lines(n / 4)); });
  if (n % 4 == 0 && labelled(FamilyKind::c4_prism_stack, n / 4))
    attempt([&] { out.push_back(prism_stack_3d(n / 4, PrismBase::c4)); });
  if (n % 3 == 0 && labelled(FamilyKind::nested_triangles, n / 3))
    attempt([&] { out.push_back(prism_stack_3d(n / 3, PrismBase::c3)); });
  for (int h = 0; (1 << (h + 1)) - 1 <= n && h <= 12; ++h)
    if ((1 << (h + 1)) - 1 == n && labelled(FamilyKind::complete_binary_tree, h))
      attempt([&] { out.push_back(binary_tree_grid(h)); });
  return out;
}

void close_monotone(BoundReport& r) {
  // (a, b) means a <= b.
  static const std::pair<Param, Param> rel[] = {
      {Param::pi13, Param::pi12},  {Param::rho13, Param::rho12}, {Param::pi12, Param::rho12},
      {Param::pi13, Param::rho13}, {Param::pi23, Param::rho23},  {Param::pi23, Param::pi13},
      {Param::rho23, Param::rho13}, {Param::pi13, Param::pibar13}};
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : rel) {
      ParamBounds &pa = r[a], &pb = r[b];
      if (!pa.defined || !pb.defined) continue;
      std::string note = std::string(to_string(a)) + " <= " + to_string(b);
      if (pa.lower > pb.lower) {
        Trust t = pa.verified_lower >= pa.lower ? Trust::machine_verified : Trust::asserted;
        r.add({b, true, pa.lower, "L15", true, t, note});
        changed = true;
      }
      if (pa.verified_lower > pb.verified_lower) {
        r.add({b, true, pa.verified_lower, "L15", true, Trust::machine_verified, note});
        changed = true;
      }
      if (pb.upper && (!pa.upper || *pb.upper < *pa.upper)) {
        r.add({a, false, *pb.upper, "L15", true, Trust::machine_verified, note});
        changed = true;
      }
    }
  }
}

BoundReport bound_report(const Graph& g, const BoundOptions& opt) {
  BoundReport rep;
  const Budget& b = opt.budget;
  long n = g.n(), m = g.m();
  bool planar = is_planar(g);
  rep[Param::pi12].defined = rep[Param::rho12].defined = planar;
  if (n == 0) return rep;
  using T = Trust;
  auto lower = [&](Param p, long v, const char* rule, bool exact, T t, std::string note = {}) {
    rep.add({p, true, v, rule, exact, t, std::move(note)});
  };
  auto upper = [&](Param p, long v, const char* rule, bool exact, T t, std::string note = {}) {
    rep.add({p, false, v, rule, exact, t, std::move(note)});
  };

  for (Param p : kAllParams) lower(p, 1, "base", true, T::machine_verified, "n >= 1");

  long es = essential_vertices(g).es;
  if (es > 0) lower(Param::rho13, ess_a_lower(es), "L1", true, T::machine_verified, "es = " + std::to_string(es));
  if (m >= n) lower(Param::rho13, ess_b_lower(n, m), "L2", true, T::machine_verified);

  if (n >= 2) {
    auto bw = bisection_width_exact(g, b);
    if (bw.exact) lower(Param::rho13, bw.value, "L3", true, T::machine_verified, "bw = " + std::to_string(bw.value));
    auto tw = treewidth_exact(g, b);
    if (tw.lower > 0)
      lower(Param::rho13, ceil_div(tw.lower, 3), "L4", tw.exact, T::machine_verified,
            "tw >= " + std::to_string(tw.lower));
  }

  auto chi = chromatic_number(g, b);
  upper(Param::pi13, chi.value, "L5", chi.exact, T::machine_verified, "chi");
  upper(Param::pi23, chi.value, "L7", chi.exact, T::machine_verified, "chi");
  if (chi.exact) {
    lower(Param::pi13, ceil_div(chi.value, 2), "L5", true, T::machine_verified, "chi/2");
    lower(Param::pi23, ceil_div(chi.value, 4), "L7", true, T::machine_verified, "chi/4");
  }
  auto lva = lva_exact(g, b);
  upper(Param::pi13, lva.value, "L6", lva.exact, T::machine_verified, "lva");
  if (lva.exact) lower(Param::pi13, lva.value, "L6", true, T::machine_verified, "lva");
  auto vt = vertex_thickness_exact(g, b);
  upper(Param::pi23, vt.value, "L7", vt.exact, T::machine_verified, "vt");
  if (vt.exact) lower(Param::pi23, vt.value, "L7", true, T::machine_verified, "vt");

  if (n >= 2 && m > 0) lower(Param::rho13, ceil_div(m, n - 1), "L8", true, T::machine_verified, "la >= m/(n-1)");
  if (m > 0) {
    lower(Param::rho13, ceil_div(g.max_degree(), 2), "L9", true, T::machine_verified, "Delta/2");
    upper(Param::rho13, m, "L9", true, T::machine_verified, "m");
  }

  if (is_complete(g) && n >= 2) {
    lower(Param::rho13, n * (n - 1) / 2, "L10", true, T::asserted, "C(n,2)");
    if (n >= 3 && n <= 10) {
      auto c4 = clique_cover_exact(static_cast<int>(n), 4, b.nodes);
      lower(Param::rho23, c4.lower, "L10", c4.exact, T::machine_verified, "c(K_n,K_4)");
    } else if (n > 10) {
      lower(Param::rho23, steiner_bounds(static_cast<int>(n), 4).lower, "L10", false, T::machine_verified,
            "Steiner bound for K_4 covers");
    }
    if (n >= 4 && n <= 9) lower(Param::rho23, kn_table_lower(static_cast<int>(n)), "L10", true, T::asserted, "table");
  }

  if (auto pq = complete_bipartite_sides(g)) {
    auto [p, q] = *pq;
    lower(Param::rho23, ceil_div(p, 2), "L11", true, T::asserted, "ceil(p/2)");
    lower(Param::rho13, ceil_div(static_cast<long>(p) * q, 2), "L11", true, T::asserted, "pq/2");
    if (q >= 3) lower(Param::pibar13, p + 1, "L11", true, T::asserted, "p+1");
    if (p == 2) lower(Param::rho12, ceil_div(3 * n - 7, 2), "L11", true, T::asserted, "ceil((3n-7)/2)");
  }

  if (planar && n >= 4 && n <= 14 && m == 3 * n - 6) {
    try {
      auto dc = dual_circumference_bound(g, b.nodes);
      lower(Param::pi12, dc.lower_bound_pi12, "L12", dc.exact, T::machine_verified,
            "c(G*) = " + std::to_string(dc.c_dual));
    } catch (const DomainError&) {
    }
  }

  if (n % 3 == 0 && build_family({FamilyKind::nested_triangles, {static_cast<int>(n / 3)}}) == g)
    lower(Param::rho12, ceil_div(n, 2), "Tk", true, T::asserted, "n/2");

  std::vector<ConstructionResult> own;
  if (opt.run_constructions) own = standard_constructions(g, b);
  std::vector<const ConstructionResult*> all = opt.attached;
  for (const auto& c : own) all.push_back(&c);
  for (const ConstructionResult* c : all) {
    auto p = certified_param(*c);
    if (!p) continue;
    std::string rule = rule_for(*c);
    rep.add({*p, false, c->witness.size(), rule, c->optimal, T::machine_verified, c->drawing.drawing().meta});
  }

  close_monotone(rep);
  return rep;
}

}  // namespace affcov
