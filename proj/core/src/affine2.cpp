#include "dyadic/affine2.hpp"

#include <ostream>

#include "dyadic/errors.hpp"
#include "literal_io.hpp"

namespace dyadic {

Vec2 midpoint(const Vec2& p, const Vec2& q) { return {midpoint(p.x, q.x), midpoint(p.y, q.y)}; }

Mat2 operator*(const Mat2& m, const Mat2& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
          m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

Vec2 operator*(const Vec2& p, const Mat2& m) {
  return {p.x * m.a + p.y * m.c, p.x * m.b + p.y * m.d};
}

DeterminantInfo det_invertible(const Mat2& m) {
  Dyadic det = m.det();
  const bool invertible = !det.is_zero() && abs(det.num()) == 1;
  return {std::move(det), invertible};
}

Mat2 inverse(const Mat2& m) {
  const auto [det, invertible] = det_invertible(m);
  if (!invertible) {
    throw DomainError("matrix is not invertible over D (det = " + format_dyadic(det) + ")");
  }
  const Dyadic inv = Dyadic(det.num(), -det.exp());  // 1/det, since det.num() = +-1
  return {m.d * inv, -m.b * inv, -m.c * inv, m.a * inv};
}

Vec2 apply(const AffineMap2& f, const Vec2& p) { return p * f.linear + f.shift; }

AffineMap2 compose(const AffineMap2& f, const AffineMap2& g) {
  return {f.linear * g.linear, f.shift * g.linear + g.shift};
}

AffineMap2 inverse(const AffineMap2& f) {
  Mat2 inv = inverse(f.linear);
  Vec2 t = -(f.shift * inv);
  return {std::move(inv), std::move(t)};
}

bool is_invertible(const AffineMap2& f) { return det_invertible(f.linear).invertible; }

BezoutSolution bezout(const Integer& a, const Integer& b) {
  // Iterative extended Euclid on (a, b): keeps r = a*s + b*t.
  Integer r0 = a, r1 = b;
  Integer s0 = 1, s1 = 0;
  Integer t0 = 0, t1 = 1;
  while (r1 != 0) {
    const Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer s2 = s0 - q * s1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1), r1 = std::move(r2);
    s0 = std::move(s1), s1 = std::move(s2);
    t0 = std::move(t1), t1 = std::move(t2);
  }
  if (abs(r0) != 1) {
    throw DomainError("bezout: gcd(" + a.str() + ", " + b.str() + ") = " + Integer(abs(r0)).str() + " != 1");
  }
  // a*s0 + b*t0 = r0 = +-1, so a*(r0 s0) - b*(-r0 t0) = 1.
  Integer y = r0 * s0;
  Integer x = -r0 * t0;

  const Integer bb = abs(b);
  if (bb == 0) {
    x = 0;  // a = +-1 and y = a
  } else if (bb == 1) {
    y = 0;
    x = -b;
  } else {
    const Integer reduced = mod_floor(y, bb);
    x = (a * reduced - 1) / b;
    y = reduced;
  }
  if (a * y - b * x != 1) throw std::logic_error("bezout: postcondition violated");
  return {std::move(x), std::move(y)};
}

namespace elementary {

AffineMap2 translation(const Vec2& t) { return {Mat2::identity(), t}; }

AffineMap2 reflection(Mirror axis) {
  switch (axis) {
    case Mirror::x_axis:
      return {Mat2::diagonal(1, -1), {}};
    case Mirror::y_axis:
      return {Mat2::diagonal(-1, 1), {}};
    case Mirror::diagonal:
      return {Mat2{0, 1, 1, 0}, {}};
    case Mirror::antidiagonal:
      return {Mat2{0, -1, -1, 0}, {}};
  }
  throw std::logic_error("reflection: bad axis");
}

AffineMap2 scale(std::int64_t k, std::int64_t l) {
  return {Mat2::diagonal(Dyadic::pow2(k), Dyadic::pow2(l)), {}};
}

AffineMap2 shear(const Dyadic& c) { return {Mat2{1, 0, c, 1}, {}}; }

AffineMap2 halving() { return {Mat2{Dyadic::pow2(-1), 0, Dyadic::pow2(-1), 1}, {}}; }

AffineMap2 on_axis(const Integer& a, const Integer& b, const Integer& variant) {
  const BezoutSolution s = bezout(a, b);
  const Integer x = s.x + variant * a;
  const Integer y = s.y + variant * b;
  return {Mat2{y, Integer(-b), Integer(-x), a}, {}};
}

}  // namespace elementary

std::string format_point(const Vec2& p) {
  return "(" + format_dyadic(p.x) + "," + format_dyadic(p.y) + ")";
}

namespace detail {

Vec2 read_point(Cursor& cur) {
  cur.expect('(');
  Vec2 p;
  p.x = parse_dyadic(cur.token(",)"));
  cur.expect(',');
  p.y = parse_dyadic(cur.token(",)"));
  cur.expect(')');
  return p;
}

}  // namespace detail

Vec2 parse_point(std::string_view text) {
  detail::Cursor cur(text, "point");
  Vec2 p = detail::read_point(cur);
  cur.expect_end();
  return p;
}

std::string format_affine_map(const AffineMap2& f) {
  const Mat2& m = f.linear;
  return "[[" + format_dyadic(m.a) + "," + format_dyadic(m.b) + "],[" + format_dyadic(m.c) + "," +
         format_dyadic(m.d) + "]]+" + format_point(f.shift);
}

AffineMap2 parse_affine_map(std::string_view text) {
  detail::Cursor cur(text, "affine map");
  AffineMap2 f;
  Mat2& m = f.linear;
  cur.expect('[');
  cur.expect('[');
  m.a = parse_dyadic(cur.token(",]"));
  cur.expect(',');
  m.b = parse_dyadic(cur.token(",]"));
  cur.expect(']');
  cur.expect(',');
  cur.expect('[');
  m.c = parse_dyadic(cur.token(",]"));
  cur.expect(',');
  m.d = parse_dyadic(cur.token(",]"));
  cur.expect(']');
  cur.expect(']');
  if (cur.consume('+')) f.shift = detail::read_point(cur);
  cur.expect_end();
  return f;
}

std::ostream& operator<<(std::ostream& os, const Vec2& p) { return os << format_point(p); }
std::ostream& operator<<(std::ostream& os, const AffineMap2& f) {
  return os << format_affine_map(f);
}

}  // namespace dyadic
