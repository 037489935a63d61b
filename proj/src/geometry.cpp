#include "affcov/geometry.hpp"

#include <algorithm>
#include <sstream>

namespace affcov {

namespace {

void require_same_dim(std::span<const QPoint> pts) {
  for (const auto& p : pts) {
    if (p.dim() != pts[0].dim()) throw GeometryError("points of mixed dimension");
    if (p.dim() != 2 && p.dim() != 3) throw GeometryError("points must be 2D or 3D");
  }
}

using Vec3 = std::array<Rational, 3>;

Vec3 diff(const QPoint& a, const QPoint& b) {
  Vec3 v;
  for (int i = 0; i < 3; ++i) v[i] = a[i] - b[i];
  return v;
}

Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

bool is_zero(const Vec3& v) { return sgn(v[0]) == 0 && sgn(v[1]) == 0 && sgn(v[2]) == 0; }

// Coordinate k is dropped, the remaining two form a 2D point.
QPoint drop(const QPoint& p, int k) {
  std::array<Rational, 2> c;
  int j = 0;
  for (int i = 0; i < 3; ++i)
    if (i != k) c[j++] = p[i];
  return QPoint(c[0], c[1]);
}

SegmentRelation collinear_case(const QPoint& a, const QPoint& b, const QPoint& c,
                               const QPoint& d) {
  int axis = 0;
  while (a[axis] == b[axis]) ++axis;
  Rational lo1 = std::min<Rational>(a[axis], b[axis]), hi1 = std::max<Rational>(a[axis], b[axis]);
  Rational lo2 = std::min<Rational>(c[axis], d[axis]), hi2 = std::max<Rational>(c[axis], d[axis]);
  Rational overlap = std::min(hi1, hi2) - std::max(lo1, lo2);
  if (sgn(overlap) < 0) return SegmentRelation::disjoint;
  if (sgn(overlap) > 0) return SegmentRelation::crossing;
  return SegmentRelation::shared_endpoint_only;
}

SegmentRelation planar_case(const QPoint& a, const QPoint& b, const QPoint& c,
                            const QPoint& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) return collinear_case(a, b, c, d);
  if (o1 * o2 < 0 && o3 * o4 < 0) return SegmentRelation::crossing;

  // Lines meet in at most one point, so any touching endpoint is the contact.
  const QPoint* touch = nullptr;
  if (o1 == 0 && on_segment(c, a, b)) touch = &c;
  else if (o2 == 0 && on_segment(d, a, b)) touch = &d;
  else if (o3 == 0 && on_segment(a, c, d)) touch = &a;
  else if (o4 == 0 && on_segment(b, c, d)) touch = &b;
  if (!touch) return SegmentRelation::disjoint;
  bool end_ab = *touch == a || *touch == b;
  bool end_cd = *touch == c || *touch == d;
  return end_ab && end_cd ? SegmentRelation::shared_endpoint_only : SegmentRelation::crossing;
}

Integer lcm_of_denominators(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& x : v) {
    Integer den = x.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  return l;
}

}  // namespace

QPoint::QPoint(Rational x, Rational y) : c_{std::move(x), std::move(y), 0}, dim_(2) {
  for (auto& v : c_) v.canonicalize();
}

QPoint::QPoint(Rational x, Rational y, Rational z)
    : c_{std::move(x), std::move(y), std::move(z)}, dim_(3) {
  for (auto& v : c_) v.canonicalize();
}

QPoint::QPoint(std::span<const Rational> coords) {
  if (coords.size() != 2 && coords.size() != 3)
    throw GeometryError("a point needs 2 or 3 coordinates");
  dim_ = static_cast<int>(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    c_[i] = coords[i];
    c_[i].canonicalize();
  }
}

QPoint QPoint::from_ints(std::initializer_list<long> coords) {
  std::vector<Rational> v;
  for (long x : coords) v.emplace_back(x);
  return QPoint(std::span<const Rational>(v));
}

QPoint QPoint::operator+(const QPoint& o) const {
  if (dim_ != o.dim_) throw GeometryError("points of mixed dimension");
  QPoint r = *this;
  for (int i = 0; i < 3; ++i) r.c_[i] += o.c_[i];
  return r;
}

QPoint QPoint::operator-(const QPoint& o) const {
  if (dim_ != o.dim_) throw GeometryError("points of mixed dimension");
  QPoint r = *this;
  for (int i = 0; i < 3; ++i) r.c_[i] -= o.c_[i];
  return r;
}

QPoint QPoint::scaled(const Rational& s) const {
  QPoint r = *this;
  for (int i = 0; i < 3; ++i) r.c_[i] *= s;
  return r;
}

bool operator==(const QPoint& a, const QPoint& b) {
  return a.dim_ == b.dim_ && a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2];
}

bool operator<(const QPoint& a, const QPoint& b) {
  if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
  for (int i = 0; i < 3; ++i) {
    if (a.c_[i] < b.c_[i]) return true;
    if (b.c_[i] < a.c_[i]) return false;
  }
  return false;
}

std::string QPoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < dim_; ++i) os << (i ? "," : "") << c_[i].get_str();
  os << ')';
  return os.str();
}

int orient(std::span<const QPoint> pts) {
  require_same_dim(pts);
  int dim = pts[0].dim();
  if (static_cast<int>(pts.size()) != dim + 1)
    throw GeometryError("orient needs dim+1 points");
  if (dim == 2) {
    Rational det = (pts[1][0] - pts[0][0]) * (pts[2][1] - pts[0][1]) -
                   (pts[1][1] - pts[0][1]) * (pts[2][0] - pts[0][0]);
    return sgn(det);
  }
  Vec3 u = diff(pts[1], pts[0]), v = diff(pts[2], pts[0]), w = diff(pts[3], pts[0]);
  Vec3 c = cross(v, w);
  Rational det = u[0] * c[0] + u[1] * c[1] + u[2] * c[2];
  return sgn(det);
}

int orient(const QPoint& a, const QPoint& b, const QPoint& c) {
  std::array<QPoint, 3> p{a, b, c};
  return orient(std::span<const QPoint>(p));
}

int orient(const QPoint& a, const QPoint& b, const QPoint& c, const QPoint& d) {
  std::array<QPoint, 4> p{a, b, c, d};
  return orient(std::span<const QPoint>(p));
}

bool collinear(const QPoint& a, const QPoint& b, const QPoint& c) {
  std::array<QPoint, 3> p{a, b, c};
  require_same_dim(p);
  return is_zero(cross(diff(b, a), diff(c, a)));
}

bool on_segment(const QPoint& p, const QPoint& a, const QPoint& b) {
  if (!collinear(a, b, p)) return false;
  for (int i = 0; i < a.dim(); ++i) {
    if (p[i] < std::min<Rational>(a[i], b[i]) || p[i] > std::max<Rational>(a[i], b[i])) return false;
  }
  return true;
}

bool in_segment_interior(const QPoint& p, const QPoint& a, const QPoint& b) {
  return p != a && p != b && on_segment(p, a, b);
}

const char* to_string(SegmentRelation r) {
  switch (r) {
    case SegmentRelation::disjoint: return "disjoint";
    case SegmentRelation::shared_endpoint_only: return "shared_endpoint_only";
    case SegmentRelation::crossing: return "crossing";
  }
  return "?";
}

SegmentRelation segments_intersect(const QPoint& a, const QPoint& b, const QPoint& c,
                                   const QPoint& d) {
  std::array<QPoint, 4> p{a, b, c, d};
  require_same_dim(p);
  if (a == b || c == d) throw GeometryError("degenerate segment");
  if (a.dim() == 2) return planar_case(a, b, c, d);

  if (orient(a, b, c, d) != 0) return SegmentRelation::disjoint;
  Vec3 u = diff(b, a);
  Vec3 n = cross(u, diff(c, a));
  if (is_zero(n)) n = cross(u, diff(d, a));
  if (is_zero(n)) return collinear_case(a, b, c, d);
  int k = 0;
  while (sgn(n[k]) == 0) ++k;
  return planar_case(drop(a, k), drop(b, k), drop(c, k), drop(d, k));
}

std::array<Integer, 3> primitive_direction(std::span<const Rational> v) {
  Integer l = lcm_of_denominators(v);
  std::array<Integer, 3> r{0, 0, 0};
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * l;
    r[i] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r[i].get_mpz_t());
  }
  if (g == 0) throw GeometryError("zero direction vector");
  int lead = 0;
  while (r[lead] == 0) ++lead;
  if (r[lead] < 0) g = -g;
  for (auto& x : r) x /= g;
  return r;
}

bool CanonLine::contains(const QPoint& p) const {
  if (p.dim() != dim) return false;
  Vec3 d{Rational(direction[0]), Rational(direction[1]), Rational(direction[2])};
  return is_zero(cross(diff(p, base), d));
}

bool operator==(const CanonLine& a, const CanonLine& b) {
  return a.dim == b.dim && a.direction == b.direction && a.base == b.base;
}

bool operator<(const CanonLine& a, const CanonLine& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  if (a.direction != b.direction) return a.direction < b.direction;
  return a.base < b.base;
}

std::vector<Rational> CanonLine::coefficients() const {
  std::vector<Rational> c;
  for (int i = 0; i < dim; ++i) c.emplace_back(direction[i]);
  for (int i = 0; i < dim; ++i) c.push_back(base[i]);
  return c;
}

std::string CanonLine::to_string() const {
  std::ostringstream os;
  os << "line" << base.to_string() << "+t(";
  for (int i = 0; i < dim; ++i) os << (i ? "," : "") << direction[i].get_str();
  os << ')';
  return os.str();
}

bool CanonPlane::contains(const QPoint& p) const {
  if (p.dim() != 3) return false;
  Rational s = normal[0] * p[0] + normal[1] * p[1] + normal[2] * p[2];
  return s == offset;
}

bool operator==(const CanonPlane& a, const CanonPlane& b) {
  return a.normal == b.normal && a.offset == b.offset;
}

bool operator<(const CanonPlane& a, const CanonPlane& b) {
  if (a.normal != b.normal) return a.normal < b.normal;
  return a.offset < b.offset;
}

std::vector<Rational> CanonPlane::coefficients() const {
  return {Rational(normal[0]), Rational(normal[1]), Rational(normal[2]), offset};
}

std::string CanonPlane::to_string() const {
  std::ostringstream os;
  os << "plane(" << normal[0].get_str() << "," << normal[1].get_str() << ","
     << normal[2].get_str() << ")." << "x=" << offset.get_str();
  return os.str();
}

CanonLine canon_line_through(const QPoint& p, std::span<const Rational> direction) {
  if (static_cast<int>(direction.size()) != p.dim())
    throw GeometryError("direction dimension mismatch");
  CanonLine l;
  l.dim = p.dim();
  l.direction = primitive_direction(direction);
  int lead = 0;
  while (l.direction[lead] == 0) ++lead;
  Rational t = p[lead] / Rational(l.direction[lead]);
  std::vector<Rational> b(l.dim);
  for (int i = 0; i < l.dim; ++i) b[i] = p[i] - t * l.direction[i];
  l.base = QPoint(std::span<const Rational>(b));
  return l;
}

CanonLine canon_line(const QPoint& p, const QPoint& q) {
  if (p.dim() != q.dim()) throw GeometryError("points of mixed dimension");
  if (p == q) throw GeometryError("canon_line of coincident points");
  std::vector<Rational> d(p.dim());
  for (int i = 0; i < p.dim(); ++i) d[i] = q[i] - p[i];
  return canon_line_through(p, d);
}

CanonLine canon_singleton_line(const QPoint& p) {
  std::vector<Rational> d(p.dim(), Rational(0));
  d[0] = 1;
  return canon_line_through(p, d);
}

CanonPlane canon_plane_with_normal(const QPoint& p, std::span<const Rational> normal) {
  if (p.dim() != 3 || normal.size() != 3) throw GeometryError("planes live in 3D");
  CanonPlane pl;
  pl.normal = primitive_direction(normal);
  pl.offset = pl.normal[0] * p[0] + pl.normal[1] * p[1] + pl.normal[2] * p[2];
  return pl;
}

CanonPlane canon_plane(const QPoint& p, const QPoint& q, const QPoint& r) {
  std::array<QPoint, 3> pts{p, q, r};
  require_same_dim(pts);
  if (p.dim() != 3) throw GeometryError("planes live in 3D");
  Vec3 n = cross(diff(q, p), diff(r, p));
  if (is_zero(n)) throw GeometryError("canon_plane of collinear points");
  return canon_plane_with_normal(p, n);
}

CanonPlane canon_plane_through_segment(const QPoint& p, const QPoint& q) {
  if (p.dim() != 3 || q.dim() != 3) throw GeometryError("planes live in 3D");
  if (p == q) throw GeometryError("degenerate segment");
  Vec3 d = diff(q, p);
  for (int k = 0; k < 3; ++k) {
    Vec3 e{0, 0, 0};
    e[k] = 1;
    Vec3 n = cross(d, e);
    if (!is_zero(n)) return canon_plane_with_normal(p, n);
  }
  throw GeometryError("unreachable");
}

CanonLine line_from_coefficients(int dim, std::span<const Rational> coeffs) {
  if ((dim != 2 && dim != 3) || static_cast<int>(coeffs.size()) != 2 * dim)
    throw GeometryError("bad line coefficient vector");
  QPoint base(coeffs.subspan(static_cast<std::size_t>(dim)));
  CanonLine l = canon_line_through(base, coeffs.first(static_cast<std::size_t>(dim)));
  return l;
}

CanonPlane plane_from_coefficients(std::span<const Rational> coeffs) {
  if (coeffs.size() != 4) throw GeometryError("bad plane coefficient vector");
  CanonPlane pl;
  for (const auto& x : coeffs.first(3)) {
    if (x.get_den() != 1) throw GeometryError("plane normal must be integral");
  }
  auto n = primitive_direction(coeffs.first(3));
  // Rescale the offset by the same factor the normal was divided by.
  int lead = 0;
  while (n[lead] == 0) ++lead;
  Rational factor = Rational(n[lead]) / coeffs[static_cast<std::size_t>(lead)];
  pl.normal = n;
  pl.offset = coeffs[3] * factor;
  return pl;
}

}  // namespace affcov
