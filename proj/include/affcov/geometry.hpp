#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace affcov {

using Rational = mpq_class;
using Integer = mpz_class;

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Point with 2 or 3 exact rational coordinates. Coordinates are kept in
/// canonical form (gcd-reduced, positive denominator).
class QPoint {
 public:
  QPoint() = default;
  QPoint(Rational x, Rational y);
  QPoint(Rational x, Rational y, Rational z);
  explicit QPoint(std::span<const Rational> coords);

  static QPoint from_ints(std::initializer_list<long> coords);

  int dim() const { return dim_; }
  const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

  QPoint operator+(const QPoint& o) const;
  QPoint operator-(const QPoint& o) const;
  QPoint scaled(const Rational& s) const;

  friend bool operator==(const QPoint& a, const QPoint& b);
  friend bool operator!=(const QPoint& a, const QPoint& b) { return !(a == b); }
  /// Lexicographic order; points of lower dimension sort first.
  friend bool operator<(const QPoint& a, const QPoint& b);

  std::string to_string() const;

 private:
  std::array<Rational, 3> c_{};
  int dim_ = 0;
};

/// Sign of the orientation determinant of 3 points in 2D or 4 points in 3D.
int orient(std::span<const QPoint> pts);
int orient(const QPoint& a, const QPoint& b, const QPoint& c);
int orient(const QPoint& a, const QPoint& b, const QPoint& c, const QPoint& d);

bool collinear(const QPoint& a, const QPoint& b, const QPoint& c);
/// True iff p lies on the closed segment [a, b].
bool on_segment(const QPoint& p, const QPoint& a, const QPoint& b);
/// True iff p lies on [a, b] and differs from both endpoints.
bool in_segment_interior(const QPoint& p, const QPoint& a, const QPoint& b);

enum class SegmentRelation { disjoint, shared_endpoint_only, crossing };

const char* to_string(SegmentRelation r);

/// Exact classification of two closed segments [a,b] and [c,d]. "crossing"
/// covers every contact other than a single common endpoint: proper
/// crossings, overlaps of positive length and an endpoint touching the
/// interior of the other segment.
SegmentRelation segments_intersect(const QPoint& a, const QPoint& b, const QPoint& c,
                                   const QPoint& d);

/// Line in canonical form: primitive integer direction whose first nonzero
/// entry is positive, and the unique base point on the line whose coordinate
/// at the first nonzero direction index is zero.
struct CanonLine {
  int dim = 0;
  std::array<Integer, 3> direction{};
  QPoint base;

  bool contains(const QPoint& p) const;
  friend bool operator==(const CanonLine& a, const CanonLine& b);
  friend bool operator<(const CanonLine& a, const CanonLine& b);
  /// Direction followed by base coordinates.
  std::vector<Rational> coefficients() const;
  std::string to_string() const;
};

/// Plane {x : normal . x = offset} with a primitive integer normal whose
/// first nonzero entry is positive.
struct CanonPlane {
  std::array<Integer, 3> normal{};
  Rational offset;

  bool contains(const QPoint& p) const;
  friend bool operator==(const CanonPlane& a, const CanonPlane& b);
  friend bool operator<(const CanonPlane& a, const CanonPlane& b);
  /// Normal followed by offset.
  std::vector<Rational> coefficients() const;
  std::string to_string() const;
};

CanonLine canon_line(const QPoint& p, const QPoint& q);
/// Line through p with the given (nonzero) direction.
CanonLine canon_line_through(const QPoint& p, std::span<const Rational> direction);
/// Line through p parallel to the first basis vector; used for singleton
/// cover objects.
CanonLine canon_singleton_line(const QPoint& p);

CanonPlane canon_plane(const QPoint& p, const QPoint& q, const QPoint& r);
/// Canonical plane containing the line pq: spanned by pq and the first basis
/// vector not parallel to it.
CanonPlane canon_plane_through_segment(const QPoint& p, const QPoint& q);
/// Plane through p orthogonal to the given normal.
CanonPlane canon_plane_with_normal(const QPoint& p, std::span<const Rational> normal);

CanonLine line_from_coefficients(int dim, std::span<const Rational> coeffs);
CanonPlane plane_from_coefficients(std::span<const Rational> coeffs);

/// Scales a rational vector to a primitive integer vector with positive
/// leading entry. Throws on the zero vector.
std::array<Integer, 3> primitive_direction(std::span<const Rational> v);

}  // namespace affcov
