// affcov command-line front end. Exit codes: 0 verified, 1 verification
// failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "affcov/certificate.hpp"
#include "affcov/export.hpp"

using namespace affcov;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphInput {
  std::string family;
  std::string graph6;
  std::string edges;
  int budget_n = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family, "family spec, e.g. complete:6 or c4xp:8");
    cmd->add_option("--graph6", graph6, "graph in graph6 format");
    cmd->add_option("--edges", edges, "edge list file ('n N' header, one 'u v' pair per line)");
    cmd->add_option("--budget-n", budget_n, "size cap for exact solvers (overrides AFFCOV_BUDGET_N)");
  }

  Graph load() const {
    int given = !family.empty() + !graph6.empty() + !edges.empty();
    if (given != 1) throw UsageError("give exactly one of --family, --graph6, --edges");
    if (!family.empty()) return family_from_string(family);
    if (!graph6.empty()) return parse_graph(graph6, GraphFormat::graph6);
    return parse_graph(read_file(edges), GraphFormat::edge_list);
  }

  Budget budget() const {
    Budget b = Budget::from_env();
    if (budget_n > 0) b.chromatic_n = b.lva_n = b.vt_n = b.treewidth_n = b.bisection_n = budget_n;
    return b;
  }

  static std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
};

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string measure(const VerifiedDrawing& d, const CoverWitness& w) {
  switch (w.kind) {
    case CoverKind::lines_for_edges:
      return std::to_string(edge_line_count(d).count);
    case CoverKind::lines_for_vertices:
      return std::to_string(min_vertex_line_cover(d).count);
    case CoverKind::planes_for_edges:
      return std::to_string(min_edge_plane_cover(d).count);
    case CoverKind::parallel_lines:
      return std::to_string(min_parallel_line_cover(d).count);
    case CoverKind::planes_for_vertices:
      return std::to_string(w.size()) + " (witness)";
  }
  return "?";
}

int cmd_draw(const GraphInput& in, const std::string& target, std::uint64_t seed, const std::string& out,
             const std::string& format) {
  Graph g = in.load();
  ConstructionResult r = build_target(g, target, seed, in.budget());
  r.seed = seed;
  CertificateFile cert = make_certificate(r, target);
  std::string text = format == "json" ? emit_certificate(cert)
                                      : export_drawing(r.drawing, &r.witness, export_format_from_string(format));
  write_out(out, text);
  std::ostream& log = out.empty() || out == "-" ? std::cerr : std::cout;
  log << "target " << target << ": claimed bound " << r.claimed_bound << ", witness " << r.witness.size() << " "
      << to_string(r.witness.kind) << ", measured " << measure(r.drawing, r.witness) << "\n";
  return kOk;
}

int cmd_verify(const std::string& file) {
  CertificateFile cert;
  try {
    cert = parse_certificate(GraphInput::read_file(file));
  } catch (const ParseError& e) {
    std::cout << "FAIL: " << e.what() << "\n";
    return kFail;
  }
  CertificateCheck chk = verify_certificate(cert);
  if (!chk.ok()) {
    std::cout << "FAIL: " << chk.describe() << "\n";
    return kFail;
  }
  std::cout << "pass: " << chk.witness_size << " " << to_string(cert.witness.kind) << " objects";
  if (cert.meta.claimed_bound > 0) std::cout << " (claimed " << cert.meta.claimed_bound << ")";
  std::cout << ", n=" << cert.drawing.graph.n() << " m=" << cert.drawing.graph.m() << " dim=" << cert.drawing.dim()
            << "\n";
  return kOk;
}

int cmd_export(const std::string& file, const std::string& format, const std::string& out) {
  CertificateFile cert = parse_certificate(GraphInput::read_file(file));
  CertificateCheck chk = verify_certificate(cert);
  if (!chk.ok()) {
    std::cerr << "FAIL: " << chk.describe() << "\n";
    return kFail;
  }
  ExportFormat f = export_format_from_string(format);
  if ((f == ExportFormat::svg2d) != (cert.drawing.dim() == 2) && f != ExportFormat::obj)
    throw UsageError(format + " does not match a " + std::to_string(cert.drawing.dim()) + "D drawing");
  write_out(out, export_drawing(*chk.drawing, &cert.witness, f));
  return kOk;
}

int cmd_bounds(const GraphInput& in, const std::string& format) {
  Graph g = in.load();
  BoundOptions opt;
  opt.budget = in.budget();
  BoundReport rep = bound_report(g, opt);
  std::cout << (format == "json" ? bound_report_json(rep) : bound_report_markdown(rep));
  return kOk;
}

int cmd_table(const std::string& kind) {
  if (kind == "kn_rho23") {
    std::cout << "| n | lower (table) | lower (clique cover) | upper (certificate) | trust |\n"
              << "|---|---|---|---|---|\n";
    std::string uppers;
    for (int n = 4; n <= 8; ++n) {
      auto cert = kn_small_plane_cover(n);
      int measured = min_edge_plane_cover(cert.drawing).count;
      auto cover = clique_cover_exact(n, 4);
      std::cout << "| " << n << " | " << kn_table_lower(n) << " | " << cover.lower << " | " << measured
                << " | lower asserted, upper machine-verified |\n";
      uppers += (n > 4 ? " " : "") + std::to_string(measured);
    }
    std::cout << "| 9 | " << kn_table_lower(9) << " | " << clique_cover_exact(9, 4).lower << " | "
              << kn_triangle_planes(9).witness.size() << " | upper from a triangle cover |\n";
    std::cout << "\nupper row n=4..8: " << uppers << "\n";
    return kOk;
  }
  if (kind == "steiner") {
    std::cout << "| n | s | c(K_n,K_s) | proven lower | exact | counting lower | Steiner system |\n"
              << "|---|---|---|---|---|---|---|\n";
    for (int s = 3; s <= 4; ++s)
      for (int n = s; n <= 13; ++n) {
        auto c = clique_cover_exact(n, s);
        auto st = steiner_bounds(n, s);
        std::cout << "| " << n << " | " << s << " | " << c.value << " | " << c.lower << " | "
                  << (c.exact ? "yes" : "no") << " | " << st.lower << " | " << (st.exact_exists ? "yes" : "no")
                  << " |\n";
      }
    return kOk;
  }
  throw UsageError("unknown table " + kind);
}

int cmd_nine_lva(int max_n) {
  if (max_n < 3 || max_n > 10) throw UsageError("--max-n must be in 3..10");
  int first = 0;
  std::cout << "| n | triangulations | lva >= 3 | example |\n|---|---|---|---|\n";
  for (int n = 3; n <= max_n; ++n) {
    auto all = planar_triangulations(n);
    int hits = 0;
    std::string example = "-";
    for (const auto& g : all)
      if (lva_exact(g).value >= 3) {
        if (!hits) example = to_graph6(g);
        ++hits;
      }
    if (hits && !first) first = n;
    std::cout << "| " << n << " | " << all.size() << " | " << hits << " | " << example << " |\n";
  }
  // Every planar graph is a spanning subgraph of a triangulation and lva is
  // monotone under subgraphs, so the triangulations decide the question.
  if (first)
    std::cout << "\nsmallest planar graph with lva 3 has " << first << " vertices\n";
  else
    std::cout << "\nno planar graph with at most " << max_n << " vertices has lva 3\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"affine cover numbers of graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  GraphInput draw_in, bounds_in;
  std::string target, out, format = "json", file, table_kind;
  std::uint64_t seed = 1;
  int max_n = 9;

  auto* draw = app.add_subcommand("draw", "build a certified drawing");
  draw_in.attach(draw);
  draw->add_option("--target", target, "construction")
      ->required()
      ->check(CLI::IsMember(target_names()));
  draw->add_option("--seed", seed, "seed for randomised constructions");
  draw->add_option("--out", out, "output file (default stdout)");
  draw->add_option("--format", format, "json, svg2d, svg-iso3d or obj")
      ->check(CLI::IsMember({"json", "svg2d", "svg-iso3d", "svg_iso3d", "obj"}));

  auto* verify = app.add_subcommand("verify", "re-check a certificate");
  verify->add_option("file", file)->required();

  auto* bounds = app.add_subcommand("bounds", "lower and upper bounds for every parameter");
  bounds_in.attach(bounds);
  std::string bounds_format = "markdown";
  bounds->add_option("--format", bounds_format)->check(CLI::IsMember({"markdown", "json"}));

  auto* table = app.add_subcommand("table", "reproduce cover tables");
  table->add_option("kind", table_kind)->required()->check(CLI::IsMember({"kn_rho23", "steiner"}));

  std::string export_format;
  auto* exp = app.add_subcommand("export", "render a certificate");
  exp->add_option("file", file)->required();
  exp->add_option("--format", export_format)
      ->required()
      ->check(CLI::IsMember({"svg2d", "svg-iso3d", "svg_iso3d", "obj"}));
  exp->add_option("--out", out);

  auto* nine = app.add_subcommand("nine-lva", "search small planar graphs for lva 3");
  nine->add_option("--max-n", max_n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*draw) return cmd_draw(draw_in, target, seed, out, format);
    if (*verify) return cmd_verify(file);
    if (*bounds) return cmd_bounds(bounds_in, bounds_format);
    if (*table) return cmd_table(table_kind);
    if (*exp) return cmd_export(file, export_format, out);
    if (*nine) return cmd_nine_lva(max_n);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConstructionError& e) {
    std::cerr << "construction failed: " << e.what();
    if (e.violation) std::cerr << " (" << e.violation->describe() << ")";
    std::cerr << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
