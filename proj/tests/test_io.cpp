#include "doctest.h"

#include <fstream>
#include <regex>
#include <sstream>
#include <set>

#include "affcov/certificate.hpp"
#include "affcov/export.hpp"
#include "json.hpp"

using namespace affcov;

namespace {

int count(const std::string& s, const std::string& needle) {
  int c = 0;
  for (std::size_t at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1)) ++c;
  return c;
}

std::string replace_first(std::string s, const std::string& from, const std::string& to) {
  auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("certificates round trip byte for byte") {
  std::vector<std::pair<ConstructionResult, std::string>> all;
  for (int n = 4; n <= 8; ++n) all.emplace_back(kn_small_plane_cover(n), "rho23_kn");
  all.emplace_back(pi23_drawing(family_from_string("complete:7")), "pi23");
  all.emplace_back(spiral_two_lines(family_from_string("path:6"), tree_tracks(family_from_string("path:6"), 0)),
                   "two_lines");
  all.emplace_back(k2q_optimal(5), "k2q");
  all.emplace_back(parallel_kpq_lines(2, 3), "parallel_kpq");
  for (const auto& [res, name] : all) {
    std::string text = emit_certificate(make_certificate(res, name));
    CertificateFile back = parse_certificate(text);
    CHECK(emit_certificate(back) == text);
    auto chk = verify_certificate(back);
    INFO(name);
    CHECK(chk.ok());
    CHECK(chk.witness_size == res.witness.size());
  }
}

TEST_CASE("fractions and large integers survive") {
  auto k7 = kn_small_plane_cover(7);
  std::string text = emit_certificate(make_certificate(k7, "rho23_kn"));
  // u7 = u2/2 + u5/3 + u6/6 = (9/2, 1, 1/3).
  CHECK(text.find("[[9,2],[1,1],[1,3]]") != std::string::npos);
  Graph g(2, {{0, 1}});
  Integer big = Integer(1) << 70;
  Drawing d{g, {QPoint(Rational(big), Rational(1, 3)), QPoint(Rational(0), Rational(0))}, "big"};
  CertificateFile c;
  c.drawing = d;
  c.witness.kind = CoverKind::lines_for_edges;
  c.witness.lines.push_back(canon_line(d.points[0], d.points[1]));
  c.witness.assignment = {0};
  std::string s = emit_certificate(c);
  CHECK(s.find("\"" + big.get_str() + "\"") != std::string::npos);
  CHECK(emit_certificate(parse_certificate(s)) == s);
  CHECK(parse_certificate(s).drawing.points[0] == d.points[0]);
  CHECK(verify_certificate(parse_certificate(s)).ok());
}

TEST_CASE("tampered certificates are rejected") {
  auto k6 = kn_small_plane_cover(6);
  CertificateFile c = make_certificate(k6, "rho23_kn");
  // Put vertex 5 on the segment between vertices 0 and 1.
  c.drawing.points[5] = (c.drawing.points[0] + c.drawing.points[1]).scaled(Rational(1, 2));
  auto chk = verify_certificate(parse_certificate(emit_certificate(c)));
  CHECK_FALSE(chk.ok());
  REQUIRE(chk.violation);
  CHECK(chk.violation->kind == Violation::Kind::vertex_on_edge);

  CertificateFile claim = make_certificate(k6, "rho23_kn");
  claim.meta.claimed_bound = 3;
  auto over = verify_certificate(claim);
  CHECK_FALSE(over.ok());
  CHECK(over.error.find("claimed 3") != std::string::npos);

  CertificateFile wrong = make_certificate(k6, "rho23_kn");
  wrong.witness.assignment[0] = (wrong.witness.assignment[0] + 1) % 4;
  auto w = verify_certificate(wrong);
  CHECK(w.drawing);
  CHECK_FALSE(w.ok());
}

TEST_CASE("malformed certificates") {
  std::string good = emit_certificate(make_certificate(kn_small_plane_cover(4), "rho23_kn"));
  CHECK_NOTHROW(parse_certificate(good));
  CHECK_THROWS_AS(parse_certificate("{"), ParseError);
  CHECK_THROWS_AS(parse_certificate("[]"), ParseError);
  CHECK_THROWS_AS(parse_certificate(replace_first(good, "\"version\": 1", "\"version\": 9")), ParseError);
  CHECK_THROWS_AS(parse_certificate(replace_first(good, "\"meta\"", "\"other\"")), ParseError);
  CHECK_THROWS_AS(parse_certificate(replace_first(good, "[0,1]", "[0,0]")), ParseError);
  CHECK_THROWS_AS(parse_certificate(replace_first(good, "planes_for_edges", "circles")), ParseError);
  CHECK_THROWS_AS(parse_certificate(replace_first(good, "\"dim\": 3", "\"dim\": 4")), ParseError);
}

TEST_CASE("svg and obj export") {
  Graph p5 = family_from_string("path:5");
  std::vector<QPoint> pts;
  for (int i = 0; i < 5; ++i) pts.push_back(QPoint::from_ints({i, 0}));
  auto w = vertex_line_witness(pts, {{0, 1, 2, 3, 4}});
  auto res = finish_construction({p5, pts, "line"}, w, 1);
  std::string svg = export_svg2d(res.drawing, &res.witness);
  CHECK(count(svg, "stroke-dasharray") == 1);
  CHECK(count(svg, "<circle") == 5);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK_THROWS_AS(export_svg_iso3d(res.drawing), GeometryError);

  auto k6 = kn_small_plane_cover(6);
  std::string iso = export_svg_iso3d(k6.drawing, &k6.witness);
  std::set<std::string> colors;
  std::regex stroke("<line [^>]*stroke=\"(#[0-9a-f]{6})\"");
  for (auto it = std::sregex_iterator(iso.begin(), iso.end(), stroke); it != std::sregex_iterator(); ++it)
    colors.insert((*it)[1]);
  CHECK(colors.size() == 4);
  CHECK_THROWS_AS(export_svg2d(k6.drawing), GeometryError);

  std::string obj = export_obj(k6.drawing);
  CHECK(count(obj, "\nv ") == 6);
  CHECK(count(obj, "\nl ") == 15);

  auto tree = binary_tree_grid(4);
  CHECK(count(export_drawing(tree.drawing, &tree.witness, ExportFormat::svg2d), "<circle") == 31);
  CHECK(export_format_from_string("svg-iso3d") == ExportFormat::svg_iso3d);
}

TEST_CASE("bound report serialisation") {
  auto rep = bound_report(family_from_string("complete:5"));
  auto j = nlohmann::json::parse(bound_report_json(rep));
  CHECK(j["params"].size() == 7);
  CHECK(j["params"]["pi12"]["defined"] == false);
  CHECK(j["params"]["rho23"]["upper"] == 3);
  CHECK(j["entries"].size() == rep.entries.size());
  std::string md = bound_report_markdown(rep);
  CHECK(count(md, "\n| pi") == 4);
  CHECK(count(md, "\n| rho") == 3);
  CHECK(count(md, "n/a") == 6);
}

TEST_CASE("shipped K_n certificates") {
  const int upper[] = {1, 3, 4, 6, 7};
  for (int n = 4; n <= 8; ++n) {
    std::ifstream in(std::string(AFFCOV_DATA_DIR) + "/certificates/k" + std::to_string(n) + ".json");
    REQUIRE(in);
    std::stringstream text;
    text << in.rdbuf();
    CertificateFile c = parse_certificate(text.str());
    CHECK(emit_certificate(c) == text.str());
    auto chk = verify_certificate(c);
    REQUIRE(chk.ok());
    CHECK(is_complete(c.drawing.graph));
    CHECK(min_edge_plane_cover(*chk.drawing).count == upper[n - 4]);
  }
}
