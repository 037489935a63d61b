#include "affcov/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace affcov {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0) throw DomainError("negative vertex count");
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw DomainError("edge endpoint out of range: " + std::to_string(u) + " " +
                        std::to_string(v));
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw DomainError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  }
  edges_.assign(seen.begin(), seen.end());
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  const auto& a = neighbors(u);
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  if (n_ > 64) throw DomainError("bitmask adjacency needs n <= 64");
  std::vector<std::uint64_t> m(static_cast<std::size_t>(n_), 0);
  for (auto [u, v] : edges_) {
    m[u] |= std::uint64_t{1} << v;
    m[v] |= std::uint64_t{1} << u;
  }
  return m;
}

// ---------------------------------------------------------------- parsing

namespace {

Graph parse_graph6(std::string_view s) {
  constexpr std::string_view header = ">>graph6<<";
  if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
    s.remove_suffix(1);
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= s.size()) throw ParseError("graph6: truncated input at offset " + std::to_string(pos));
    int c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126)
      throw ParseError("graph6: invalid byte at offset " + std::to_string(pos));
    ++pos;
    return c - 63;
  };
  if (s.empty()) throw ParseError("graph6: empty input");
  if (s[0] == ':' || s[0] == '&') throw ParseError("graph6: sparse6/digraph6 header at offset 0");
  long n = next();
  if (n == 63) {
    if (pos < s.size() && s[pos] == '~') {
      ++pos;
      n = 0;
      for (int i = 0; i < 6; ++i) n = (n << 6) | next();
    } else {
      n = 0;
      for (int i = 0; i < 3; ++i) n = (n << 6) | next();
    }
  }
  if (n > 100000) throw ParseError("graph6: vertex count too large");
  std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1 < 0 ? 0 : n - 1) / 2;
  std::size_t need = (bits + 5) / 6;
  if (s.size() - pos != need)
    throw ParseError("graph6: expected " + std::to_string(need) + " data bytes after offset " +
                     std::to_string(pos) + ", found " + std::to_string(s.size() - pos));
  std::vector<Edge> edges;
  std::size_t k = 0;
  int word = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (k % 6 == 0) word = next();
      if ((word >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (k % 6 != 0 && (word & ((1 << (6 - k % 6)) - 1)) != 0)
    throw ParseError("graph6: nonzero padding bits at offset " + std::to_string(pos - 1));
  return Graph(static_cast<int>(n), edges);
}

bool parse_int(std::string_view tok, long& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::set<Edge> seen;
  long declared = -1;
  long max_index = -1;
  int lineno = 0;
  bool seen_content = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) toks.push_back(line.substr(i, j - i));
      i = j;
    }
    if (end == text.size() && toks.empty()) break;
    if (toks.empty()) continue;
    auto where = "edge list line " + std::to_string(lineno) + ": ";
    if (toks[0] == "n") {
      if (seen_content || toks.size() != 2 || !parse_int(toks[1], declared) || declared < 0)
        throw ParseError(where + "malformed header");
      seen_content = true;
      continue;
    }
    seen_content = true;
    long u, v;
    if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v))
      throw ParseError(where + "expected two integers");
    if (u < 0 || v < 0) throw ParseError(where + "negative vertex index");
    if (declared >= 0 && (u >= declared || v >= declared))
      throw ParseError(where + "vertex index out of range");
    if (u == v) throw ParseError(where + "self-loop at vertex " + std::to_string(u));
    Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    if (!seen.insert(e).second) throw ParseError(where + "duplicate edge");
    edges.push_back(e);
    max_index = std::max({max_index, u, v});
    if (end == text.size()) break;
  }
  long n = declared >= 0 ? declared : max_index + 1;
  return Graph(static_cast<int>(n), edges);
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edge_list(text);
}

std::string to_graph6(const Graph& g) {
  std::string out;
  long n = g.n();
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int sh = 12; sh >= 0; sh -= 6) out.push_back(static_cast<char>(((n >> sh) & 63) + 63));
  } else {
    out += "~~";
    for (int sh = 30; sh >= 0; sh -= 6) out.push_back(static_cast<char>(((n >> sh) & 63) + 63));
  }
  int word = 0, k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      word = (word << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++k == 6) {
        out.push_back(static_cast<char>(word + 63));
        word = k = 0;
      }
    }
  }
  if (k) out.push_back(static_cast<char>((word << (6 - k)) + 63));
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.n() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

// --------------------------------------------------------------- families

namespace {

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

void need(bool ok, const std::string& msg) {
  if (!ok) throw DomainError(msg);
}

Graph nested_squares(int k) {
  std::vector<Edge> e;
  for (int j = 0; j < k; ++j) {
    for (int c = 0; c < 4; ++c) e.emplace_back(4 * j + c, 4 * j + (c + 1) % 4);
    if (j + 1 < k) {
      int off = j % 2;
      e.emplace_back(4 * j + off, 4 * (j + 1) + off);
      e.emplace_back(4 * j + off + 2, 4 * (j + 1) + off + 2);
    }
  }
  return Graph(4 * k, e);
}

Graph named_graph(std::string_view name) {
  std::vector<Edge> e;
  if (name == "petersen") {
    for (int i = 0; i < 5; ++i) {
      e.emplace_back(i, (i + 1) % 5);
      e.emplace_back(i, i + 5);
      e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph(10, e);
  }
  if (name == "octahedron") {
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        if (i / 2 != j / 2) e.emplace_back(i, j);
    return Graph(6, e);
  }
  if (name == "icosahedron") {
    for (int j = 0; j < 5; ++j) {
      e.emplace_back(0, 1 + j);
      e.emplace_back(1 + j, 1 + (j + 1) % 5);
      e.emplace_back(1 + j, 6 + j);
      e.emplace_back(1 + j, 6 + (j + 1) % 5);
      e.emplace_back(6 + j, 6 + (j + 1) % 5);
      e.emplace_back(6 + j, 11);
    }
    return Graph(12, e);
  }
  if (name == "cube") {
    for (int v = 0; v < 8; ++v)
      for (int b = 0; b < 3; ++b)
        if (!(v >> b & 1)) e.emplace_back(v, v | 1 << b);
    return Graph(8, e);
  }
  if (name == "lva3_planar9") {
    // Hub 8 over an 8-cycle whose even vertices are corners; corner chords
    // around the square plus one diagonal.
    for (int i = 0; i < 8; ++i) {
      e.emplace_back(i, 8);
      e.emplace_back(i, (i + 1) % 8);
    }
    for (int c = 0; c < 8; c += 2) e.emplace_back(c, (c + 2) % 8);
    e.emplace_back(2, 6);
    return Graph(9, e);
  }
  throw DomainError("unknown named graph: " + std::string(name));
}

struct KindName {
  FamilyKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {FamilyKind::complete, "complete"},
    {FamilyKind::complete_bipartite, "complete_bipartite"},
    {FamilyKind::cycle, "cycle"},
    {FamilyKind::path, "path"},
    {FamilyKind::nested_triangles, "nested_triangles"},
    {FamilyKind::nested_squares, "nested_squares"},
    {FamilyKind::c4_prism_stack, "c4_prism_stack"},
    {FamilyKind::complete_binary_tree, "complete_binary_tree"},
    {FamilyKind::caterpillar, "caterpillar"},
    {FamilyKind::balanced_multipartite, "balanced_multipartite"},
};

}  // namespace

std::string to_string(FamilyKind k) {
  for (auto& kn : kKindNames)
    if (kn.kind == k) return kn.name;
  return "?";
}

Graph build_family(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto count = [&](std::size_t c) {
    need(p.size() == c, to_string(spec.kind) + " takes " + std::to_string(c) + " parameter(s)");
  };
  switch (spec.kind) {
    case FamilyKind::complete:
      count(1);
      need(p[0] >= 1, "complete(n) needs n >= 1");
      return complete_graph(p[0]);
    case FamilyKind::complete_bipartite: {
      count(2);
      need(p[0] >= 1 && p[0] <= p[1], "complete_bipartite(p,q) needs 1 <= p <= q");
      std::vector<Edge> e;
      for (int a = 0; a < p[0]; ++a)
        for (int b = 0; b < p[1]; ++b) e.emplace_back(a, p[0] + b);
      return Graph(p[0] + p[1], e);
    }
    case FamilyKind::cycle:
      count(1);
      need(p[0] >= 3, "cycle(n) needs n >= 3");
      return cycle_graph(p[0]);
    case FamilyKind::path:
      count(1);
      need(p[0] >= 1, "path(n) needs n >= 1");
      return path_graph(p[0]);
    case FamilyKind::nested_triangles:
      count(1);
      need(p[0] >= 1, "nested_triangles(k) needs k >= 1");
      return cartesian_product(path_graph(p[0]), cycle_graph(3));
    case FamilyKind::nested_squares:
      count(1);
      need(p[0] >= 1, "nested_squares(k) needs k >= 1");
      return nested_squares(p[0]);
    case FamilyKind::c4_prism_stack:
      count(1);
      need(p[0] >= 1, "c4_prism_stack(k) needs k >= 1");
      return cartesian_product(path_graph(p[0]), cycle_graph(4));
    case FamilyKind::complete_binary_tree: {
      count(1);
      need(p[0] >= 0 && p[0] <= 20, "complete_binary_tree(h) needs 0 <= h <= 20");
      int n = (1 << (p[0] + 1)) - 1;
      std::vector<Edge> e;
      for (int v = 1; v < n; ++v) e.emplace_back((v - 1) / 2, v);
      return Graph(n, e);
    }
    case FamilyKind::caterpillar: {
      need(!p.empty() && p[0] >= 1, "caterpillar(s, leaves...) needs spine s >= 1");
      int s = p[0];
      std::vector<int> leaves;
      if (p.size() == 2) leaves.assign(static_cast<std::size_t>(s), p[1]);
      else if (p.size() == static_cast<std::size_t>(s) + 1) leaves.assign(p.begin() + 1, p.end());
      else need(false, "caterpillar takes a spine length plus one or s leaf counts");
      std::vector<Edge> e;
      for (int i = 0; i + 1 < s; ++i) e.emplace_back(i, i + 1);
      int next = s;
      for (int i = 0; i < s; ++i) {
        need(leaves[i] >= 0, "caterpillar leaf counts must be >= 0");
        for (int l = 0; l < leaves[i]; ++l) e.emplace_back(i, next++);
      }
      return Graph(next, e);
    }
    case FamilyKind::balanced_multipartite: {
      count(2);
      need(p[0] >= 1 && p[1] >= p[0], "balanced_multipartite(r,n) needs 1 <= r <= n");
      int r = p[0], n = p[1];
      std::vector<int> cls;
      for (int c = 0; c < r; ++c) {
        int size = n / r + (c < n % r ? 1 : 0);
        for (int i = 0; i < size; ++i) cls.push_back(c);
      }
      std::vector<Edge> e;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (cls[i] != cls[j]) e.emplace_back(i, j);
      return Graph(n, e);
    }
  }
  throw DomainError("unknown family");
}

FamilySpec parse_family_spec(std::string_view text) {
  auto colon = text.find(':');
  std::string kind(text.substr(0, colon));
  std::vector<int> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
      std::size_t end = rest.find(',', start);
      if (end == std::string_view::npos) end = rest.size();
      long v;
      if (!parse_int(rest.substr(start, end - start), v))
        throw ParseError("bad family parameter in '" + std::string(text) + "'");
      params.push_back(static_cast<int>(v));
      start = end + 1;
    }
  }
  static const std::pair<const char*, FamilyKind> aliases[] = {
      {"c4xp", FamilyKind::c4_prism_stack}, {"kpq", FamilyKind::complete_bipartite},
      {"tk", FamilyKind::nested_triangles}, {"sk", FamilyKind::nested_squares},
      {"bintree", FamilyKind::complete_binary_tree}, {"multipartite", FamilyKind::balanced_multipartite},
  };
  for (auto& kn : kKindNames)
    if (kind == kn.name) return {kn.kind, params};
  for (auto& [a, k] : aliases)
    if (kind == a) return {k, params};
  throw ParseError("unknown family kind '" + kind + "'");
}

Graph family_from_string(std::string_view text) {
  if (text.find(':') == std::string_view::npos) {
    for (const char* name : {"petersen", "octahedron", "icosahedron", "cube", "lva3_planar9"})
      if (text == name) return named_graph(text);
  }
  if (text.substr(0, 6) == "named:") return named_graph(text.substr(6));
  return build_family(parse_family_spec(text));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  int hn = h.n();
  std::vector<Edge> e;
  for (int u = 0; u < g.n(); ++u)
    for (auto [a, b] : h.edges()) e.emplace_back(u * hn + a, u * hn + b);
  for (auto [a, b] : g.edges())
    for (int v = 0; v < hn; ++v) e.emplace_back(a * hn + v, b * hn + v);
  return Graph(g.n() * hn, e);
}

// ------------------------------------------------------------- predicates

int count_triangles_at(const Graph& g, int v) {
  int t = 0;
  const auto& nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (g.has_edge(nb[i], nb[j])) ++t;
  return t;
}

EssentialVertices essential_vertices(const Graph& g) {
  EssentialVertices r;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) >= 3 || count_triangles_at(g, v) > 0) r.vertices.push_back(v);
  r.es = static_cast<int>(r.vertices.size());
  return r;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& part) {
  std::vector<int> idx(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < part.size(); ++i) {
    if (part[i] < 0 || part[i] >= g.n()) throw DomainError("vertex out of range");
    if (idx[part[i]] != -1) throw DomainError("repeated vertex in part");
    idx[part[i]] = static_cast<int>(i);
  }
  std::vector<Edge> e;
  for (auto [u, v] : g.edges())
    if (idx[u] >= 0 && idx[v] >= 0) e.emplace_back(idx[u], idx[v]);
  return Graph(static_cast<int>(part.size()), e);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = static_cast<int>(out.size()) - 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (int w : g.neighbors(v))
        if (comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_forest(const Graph& g) {
  return g.m() == g.n() - static_cast<int>(connected_components(g).size());
}

bool is_tree(const Graph& g) { return g.n() >= 1 && is_connected(g) && g.m() == g.n() - 1; }

bool is_linear_forest(const Graph& g, const std::vector<int>& part) {
  Graph h = induced_subgraph(g, part);
  return h.max_degree() <= 2 && is_forest(h);
}

bool is_independent(const Graph& g, const std::vector<int>& part) {
  return induced_subgraph(g, part).m() == 0;
}

bool is_complete(const Graph& g) {
  return static_cast<long>(g.m()) == static_cast<long>(g.n()) * (g.n() - 1) / 2;
}

std::optional<std::pair<int, int>> complete_bipartite_sides(const Graph& g) {
  if (g.n() < 2 || !is_connected(g)) return std::nullopt;
  std::vector<int> side(static_cast<std::size_t>(g.n()), -1);
  side[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        stack.push_back(w);
      } else if (side[w] == side[v]) {
        return std::nullopt;
      }
    }
  }
  int a = static_cast<int>(std::count(side.begin(), side.end(), 0));
  int b = g.n() - a;
  if (static_cast<long>(a) * b != g.m()) return std::nullopt;
  return std::make_pair(std::min(a, b), std::max(a, b));
}

int degeneracy(const Graph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.n()));
  std::vector<bool> gone(static_cast<std::size_t>(g.n()), false);
  for (int v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
  int best = 0;
  for (int step = 0; step < g.n(); ++step) {
    int v = -1;
    for (int u = 0; u < g.n(); ++u)
      if (!gone[u] && (v < 0 || deg[u] < deg[v])) v = u;
    best = std::max(best, deg[v]);
    gone[v] = true;
    for (int w : g.neighbors(v))
      if (!gone[w]) --deg[w];
  }
  return best;
}

std::uint64_t uniform_below(std::uint64_t word, std::uint64_t bound) {
  if (bound == 0) throw DomainError("uniform_below with empty range");
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(word) * bound) >> 64);
}

Graph random_connected_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  std::set<Edge> in;
  for (int v = 1; v < n; ++v) {
    int parent = static_cast<int>(uniform_below(rng(), static_cast<std::uint64_t>(v)));
    e.emplace_back(parent, v);
    in.insert({parent, v});
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p && !in.count({i, j})) e.emplace_back(i, j);
    }
  return Graph(n, e);
}

}  // namespace affcov
