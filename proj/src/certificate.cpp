#include "affcov/certificate.hpp"

#include <sstream>

#include "json.hpp"

namespace affcov {

namespace {

using nlohmann::json;

std::string int_text(const Integer& z) {
  if (z.fits_slong_p()) return z.get_str();
  return json(z.get_str()).dump();
}

std::string rational_text(const Rational& q) {
  return "[" + int_text(q.get_num()) + "," + int_text(q.get_den()) + "]";
}

std::string vector_text(const std::vector<Rational>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + rational_text(v[i]);
  return s + "]";
}

std::vector<Rational> point_coords(const QPoint& p) {
  std::vector<Rational> v;
  for (int i = 0; i < p.dim(); ++i) v.push_back(p[i]);
  return v;
}

[[noreturn]] void bad(const std::string& what) { throw ParseError("certificate: " + what); }

Integer parse_int(const json& j) {
  if (j.is_number_integer()) return Integer(j.dump());
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    Integer z;
    if (s.empty() || z.set_str(s, 10) != 0) bad("bad integer string '" + s + "'");
    return z;
  }
  bad("expected an integer");
}

Rational parse_rational(const json& j) {
  if (!j.is_array() || j.size() != 2) bad("expected [num, den]");
  Integer num = parse_int(j[0]), den = parse_int(j[1]);
  if (den == 0) bad("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::vector<Rational> parse_vector(const json& j) {
  if (!j.is_array()) bad("expected a coordinate vector");
  std::vector<Rational> v;
  for (const auto& x : j) v.push_back(parse_rational(x));
  return v;
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

CertificateFile make_certificate(const ConstructionResult& r, std::string construction) {
  CertificateFile c;
  c.drawing = r.drawing.drawing();
  c.drawing.meta = construction;
  c.witness = r.witness;
  c.meta.construction = std::move(construction);
  c.meta.seed = r.seed;
  c.meta.claimed_bound = r.claimed_bound;
  return c;
}

std::string emit_certificate(const CertificateFile& c) {
  std::ostringstream os;
  os << "{\n  \"version\": " << c.version << ",\n";
  os << "  \"graph\": " << json(to_graph6(c.drawing.graph)).dump() << ",\n";
  os << "  \"drawing\": {\n    \"dim\": " << c.drawing.dim() << ",\n    \"points\": [";
  for (std::size_t i = 0; i < c.drawing.points.size(); ++i)
    os << (i ? ",\n      " : "\n      ") << vector_text(point_coords(c.drawing.points[i]));
  os << (c.drawing.points.empty() ? "]" : "\n    ]") << "\n  },\n";
  os << "  \"witness\": {\n    \"kind\": " << json(to_string(c.witness.kind)).dump() << ",\n";
  os << "    \"objects\": [";
  std::vector<std::vector<Rational>> objs;
  if (uses_planes(c.witness.kind))
    for (const auto& p : c.witness.planes) objs.push_back(p.coefficients());
  else
    for (const auto& l : c.witness.lines) objs.push_back(l.coefficients());
  for (std::size_t i = 0; i < objs.size(); ++i)
    os << (i ? ",\n      " : "\n      ") << vector_text(objs[i]);
  os << (objs.empty() ? "]" : "\n    ]") << ",\n    \"assignment\": [";
  for (std::size_t i = 0; i < c.witness.assignment.size(); ++i) os << (i ? "," : "") << c.witness.assignment[i];
  os << "]\n  },\n";
  os << "  \"meta\": {\n";
  os << "    \"construction\": " << json(c.meta.construction).dump() << ",\n";
  os << "    \"seed\": " << c.meta.seed << ",\n";
  os << "    \"tool_version\": " << json(c.meta.tool_version).dump() << ",\n";
  os << "    \"claimed_bound\": " << c.meta.claimed_bound << "\n  }\n}\n";
  return os.str();
}

CertificateFile parse_certificate(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(e.what());
  }
  if (!j.is_object()) bad("top level must be an object");
  CertificateFile c;
  try {
    c.version = field(j, "version").get<int>();
    if (c.version != kCertificateVersion) bad("unsupported version " + std::to_string(c.version));
    c.drawing.graph = parse_graph(field(j, "graph").get<std::string>(), GraphFormat::graph6);

    const json& d = field(j, "drawing");
    int dim = field(d, "dim").get<int>();
    if (dim != 2 && dim != 3) bad("dim must be 2 or 3");
    for (const auto& p : field(d, "points")) {
      auto v = parse_vector(p);
      if (static_cast<int>(v.size()) != dim) bad("point of wrong dimension");
      c.drawing.points.emplace_back(v);
    }

    const json& w = field(j, "witness");
    c.witness.kind = cover_kind_from_string(field(w, "kind").get<std::string>());
    for (const auto& o : field(w, "objects")) {
      auto v = parse_vector(o);
      if (uses_planes(c.witness.kind))
        c.witness.planes.push_back(plane_from_coefficients(v));
      else
        c.witness.lines.push_back(line_from_coefficients(dim, v));
    }
    c.witness.assignment = field(w, "assignment").get<std::vector<int>>();

    const json& m = field(j, "meta");
    c.meta.construction = field(m, "construction").get<std::string>();
    c.meta.seed = field(m, "seed").get<std::uint64_t>();
    c.meta.tool_version = field(m, "tool_version").get<std::string>();
    c.meta.claimed_bound = field(m, "claimed_bound").get<int>();
  } catch (const json::exception& e) {
    bad(e.what());
  } catch (const GeometryError& e) {
    bad(e.what());
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
  c.drawing.meta = c.meta.construction;
  return c;
}

std::string CertificateCheck::describe() const {
  if (violation) return violation->describe();
  if (!error.empty()) return error;
  return "ok";
}

CertificateCheck verify_certificate(const CertificateFile& c) {
  CertificateCheck out;
  VerifyResult vr = verify_crossing_free(c.drawing);
  out.violation = vr.violation;
  if (!vr.ok()) return out;
  out.drawing = vr.drawing;
  out.witness_size = c.witness.size();
  if (auto problem = validate_witness(c.drawing, c.witness))
    out.error = "witness: " + *problem;
  else if (c.meta.claimed_bound > 0 && out.witness_size > c.meta.claimed_bound)
    out.error = "witness uses " + std::to_string(out.witness_size) + " objects, claimed " +
                std::to_string(c.meta.claimed_bound);
  return out;
}

std::string bound_report_json(const BoundReport& r) {
  json j;
  for (Param p : kAllParams) {
    const auto& b = r[p];
    json e = {{"defined", b.defined}, {"lower", b.lower}, {"verified_lower", b.verified_lower}};
    e["upper"] = b.upper ? json(*b.upper) : json(nullptr);
    j["params"][to_string(p)] = e;
  }
  j["entries"] = json::array();
  for (const auto& e : r.entries)
    j["entries"].push_back({{"param", to_string(e.param)},
                            {"bound", e.is_lower ? "lower" : "upper"},
                            {"value", e.value},
                            {"rule", e.rule},
                            {"exact", e.exact},
                            {"trust", to_string(e.trust)},
                            {"note", e.note}});
  return j.dump(2) + "\n";
}

std::string bound_report_markdown(const BoundReport& r) {
  std::ostringstream os;
  os << "| parameter | lower | verified lower | upper |\n|---|---|---|---|\n";
  for (Param p : kAllParams) {
    const auto& b = r[p];
    os << "| " << to_string(p) << " | ";
    if (!b.defined) {
      os << "n/a | n/a | n/a |\n";
      continue;
    }
    os << b.lower << " | " << b.verified_lower << " | " << (b.upper ? std::to_string(*b.upper) : "?") << " |\n";
  }
  os << "\n| rule | parameter | bound | value | trust | note |\n|---|---|---|---|---|---|\n";
  for (const auto& e : r.entries)
    os << "| " << e.rule << " | " << to_string(e.param) << " | " << (e.is_lower ? ">=" : "<=") << " | "
       << e.value << (e.exact ? "" : " (budget)") << " | " << to_string(e.trust) << " | " << e.note << " |\n";
  return os.str();
}

}  // namespace affcov
