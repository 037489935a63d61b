#include "affcov/export.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace affcov {

namespace {

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
                                "#8c564b", "#e377c2", "#bcbd22", "#7f7f7f", "#393b79", "#637939"};
constexpr int kPaletteSize = 12;
constexpr double kCanvas = 600.0;
constexpr double kMargin = 30.0;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

struct Frame {
  double min_x = 0, min_y = 0, scale = 1;

  static Frame fit(const std::vector<std::array<double, 2>>& pts) {
    Frame f;
    if (pts.empty()) return f;
    double max_x = pts[0][0], max_y = pts[0][1];
    f.min_x = max_x;
    f.min_y = max_y;
    for (auto [x, y] : pts) {
      f.min_x = std::min(f.min_x, x);
      f.min_y = std::min(f.min_y, y);
      max_x = std::max(max_x, x);
      max_y = std::max(max_y, y);
    }
    double span = std::max({max_x - f.min_x, max_y - f.min_y, 1e-9});
    f.scale = (kCanvas - 2 * kMargin) / span;
    return f;
  }
  // SVG y grows downwards.
  double sx(double x) const { return kMargin + (x - min_x) * scale; }
  double sy(double y) const { return kCanvas - kMargin - (y - min_y) * scale; }
};

std::string header() {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n"
         "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
}

void edges_and_vertices(std::ostringstream& os, const VerifiedDrawing& d, const Frame& f,
                        const std::vector<std::array<double, 2>>& pts, const CoverWitness* w) {
  bool by_edge = w && covers_edges(w->kind);
  bool by_vertex = w && !covers_edges(w->kind);
  const auto& edges = d.graph().edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    const char* color = by_edge ? kPalette[w->assignment[e] % kPaletteSize] : "black";
    os << "<line x1=\"" << num(f.sx(pts[u][0])) << "\" y1=\"" << num(f.sy(pts[u][1])) << "\" x2=\""
       << num(f.sx(pts[v][0])) << "\" y2=\"" << num(f.sy(pts[v][1])) << "\" stroke=\"" << color
       << "\" stroke-width=\"2\"/>\n";
  }
  for (std::size_t v = 0; v < pts.size(); ++v) {
    const char* color = by_vertex ? kPalette[w->assignment[v] % kPaletteSize] : "black";
    os << "<circle cx=\"" << num(f.sx(pts[v][0])) << "\" cy=\"" << num(f.sy(pts[v][1])) << "\" r=\"4\" fill=\""
       << color << "\"><title>" << v << "</title></circle>\n";
  }
}

}  // namespace

ExportFormat export_format_from_string(const std::string& s) {
  if (s == "svg2d") return ExportFormat::svg2d;
  if (s == "svg_iso3d" || s == "svg-iso3d") return ExportFormat::svg_iso3d;
  if (s == "obj") return ExportFormat::obj;
  throw std::invalid_argument("unknown export format: " + s);
}

std::string export_svg2d(const VerifiedDrawing& d, const CoverWitness* w) {
  if (d.dim() != 2) throw GeometryError("svg2d needs a 2D drawing");
  std::vector<std::array<double, 2>> pts;
  for (const auto& p : d.points()) pts.push_back({p[0].get_d(), p[1].get_d()});
  Frame f = Frame::fit(pts);
  std::ostringstream os;
  os << header();
  if (w && !uses_planes(w->kind)) {
    // Clip each cover line to the parameter range that spans the drawing.
    double lo_x = f.min_x, lo_y = f.min_y, hi = (kCanvas - 2 * kMargin) / f.scale;
    for (std::size_t i = 0; i < w->lines.size(); ++i) {
      const CanonLine& l = w->lines[i];
      double dx = l.direction[0].get_d(), dy = l.direction[1].get_d();
      double bx = l.base[0].get_d(), by = l.base[1].get_d();
      double len2 = dx * dx + dy * dy, t0 = 1e300, t1 = -1e300;
      for (double cx : {lo_x, lo_x + hi})
        for (double cy : {lo_y, lo_y + hi}) {
          double t = ((cx - bx) * dx + (cy - by) * dy) / len2;
          t0 = std::min(t0, t);
          t1 = std::max(t1, t);
        }
      os << "<line class=\"cover\" x1=\"" << num(f.sx(bx + t0 * dx)) << "\" y1=\"" << num(f.sy(by + t0 * dy))
         << "\" x2=\"" << num(f.sx(bx + t1 * dx)) << "\" y2=\"" << num(f.sy(by + t1 * dy)) << "\" stroke=\""
         << kPalette[i % kPaletteSize] << "\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
    }
  }
  edges_and_vertices(os, d, f, pts, w && !covers_edges(w->kind) ? w : nullptr);
  os << "</svg>\n";
  return os.str();
}

std::string export_svg_iso3d(const VerifiedDrawing& d, const CoverWitness* w) {
  if (d.dim() != 3) throw GeometryError("svg_iso3d needs a 3D drawing");
  const double c = std::cos(M_PI / 6), s = std::sin(M_PI / 6);
  std::vector<std::array<double, 2>> pts;
  for (const auto& p : d.points()) {
    double x = p[0].get_d(), y = p[1].get_d(), z = p[2].get_d();
    pts.push_back({(x - y) * c, z + (x + y) * s});
  }
  Frame f = Frame::fit(pts);
  std::ostringstream os;
  os << header();
  edges_and_vertices(os, d, f, pts, w);
  os << "</svg>\n";
  return os.str();
}

std::string export_obj(const VerifiedDrawing& d) {
  std::ostringstream os;
  os << "# " << d.graph().n() << " vertices, " << d.graph().m() << " edges\n";
  for (const auto& p : d.points()) {
    os << "v";
    for (int i = 0; i < 3; ++i) os << ' ' << (i < p.dim() ? p[i].get_d() : 0.0);
    os << '\n';
  }
  for (auto [u, v] : d.graph().edges()) os << "l " << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

std::string export_drawing(const VerifiedDrawing& d, const CoverWitness* w, ExportFormat f) {
  switch (f) {
    case ExportFormat::svg2d:
      return export_svg2d(d, w);
    case ExportFormat::svg_iso3d:
      return export_svg_iso3d(d, w);
    case ExportFormat::obj:
      return export_obj(d);
  }
  return {};
}

}  // namespace affcov
