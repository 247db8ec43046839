#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "dyadic/dyadic.hpp"
#include "dyadic/integer.hpp"

namespace dyadic {

struct Vec2 {
  Dyadic x;
  Dyadic y;

  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend std::strong_ordering operator<=>(const Vec2& a, const Vec2& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

inline Vec2 operator+(const Vec2& p, const Vec2& q) { return {p.x + q.x, p.y + q.y}; }
inline Vec2 operator-(const Vec2& p, const Vec2& q) { return {p.x - q.x, p.y - q.y}; }
inline Vec2 operator-(const Vec2& p) { return {-p.x, -p.y}; }

/// p.x * q.y - p.y * q.x
inline Dyadic cross(const Vec2& p, const Vec2& q) { return p.x * q.y - p.y * q.x; }

Vec2 midpoint(const Vec2& p, const Vec2& q);

/// Row-major 2x2 matrix [[a, b], [c, d]]. Points are row vectors and act by
/// right multiplication: (x, y) M = (x a + y c, x b + y d).
struct Mat2 {
  Dyadic a{1}, b{0}, c{0}, d{1};

  static Mat2 identity() { return {}; }
  static Mat2 diagonal(const Dyadic& p, const Dyadic& q) { return {p, 0, 0, q}; }

  Dyadic det() const { return a * d - b * c; }

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 operator*(const Mat2& m, const Mat2& n);
Vec2 operator*(const Vec2& p, const Mat2& m);

struct DeterminantInfo {
  Dyadic det;
  bool invertible;  // det = +-2^k, i.e. the matrix lies in GL(2, D)
};

DeterminantInfo det_invertible(const Mat2& m);

/// Throws DomainError unless m is invertible over D.
Mat2 inverse(const Mat2& m);

/// x |-> x * linear + shift.
struct AffineMap2 {
  Mat2 linear;
  Vec2 shift;

  static AffineMap2 identity() { return {}; }

  friend bool operator==(const AffineMap2&, const AffineMap2&) = default;
};

Vec2 apply(const AffineMap2& f, const Vec2& p);

/// The map p |-> g(f(p)): f is applied first.
AffineMap2 compose(const AffineMap2& f, const AffineMap2& g);

AffineMap2 inverse(const AffineMap2& f);

bool is_invertible(const AffineMap2& f);

/// Solution of a*y - b*x = 1.
struct BezoutSolution {
  Integer x;
  Integer y;
};

/// Extended Euclid. Returns the canonical solution with 0 <= y < |b| when
/// |b| > 1, y = 0 when |b| = 1 and x = 0 when b = 0. Throws DomainError when
/// gcd(a, b) != 1.
BezoutSolution bezout(const Integer& a, const Integer& b);

/// Constructors for the named automorphisms of the dyadic plane.
namespace elementary {

enum class Mirror { x_axis, y_axis, diagonal, antidiagonal };

AffineMap2 translation(const Vec2& t);

/// x_axis: (x, y) -> (x, -y); y_axis: (x, y) -> (-x, y);
/// diagonal: y = x; antidiagonal: y = -x.
AffineMap2 reflection(Mirror axis);

/// diag(2^k, 2^l).
AffineMap2 scale(std::int64_t k, std::int64_t l);

/// [[1, 0], [c, 1]]: (x, y) -> (x + c y, y).
AffineMap2 shear(const Dyadic& c);

/// [[1/2, 0], [1/2, 1]]: (x, y) -> ((x + y) / 2, y).
AffineMap2 halving();

/// [[y, -b], [-x, a]] with a*y - b*x = 1, taking (m a, m b) to (m, 0).
/// `variant` selects the Bezout solution (x + t a, y + t b); 0 is canonical.
AffineMap2 on_axis(const Integer& a, const Integer& b, const Integer& variant = 0);

}  // namespace elementary

std::string format_point(const Vec2& p);
Vec2 parse_point(std::string_view text);

/// `[[a,b],[c,d]]+(tx,ty)`; the translation part is optional on input.
std::string format_affine_map(const AffineMap2& f);
AffineMap2 parse_affine_map(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Vec2& p);
std::ostream& operator<<(std::ostream& os, const AffineMap2& f);

}  // namespace dyadic
