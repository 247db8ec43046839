#include "dyadic/triangle.hpp"

#include <ostream>

#include "dyadic/errors.hpp"
#include "literal_io.hpp"

namespace dyadic {

Dyadic signed_area2(const Triangle& t) { return cross(t[1] - t[0], t[2] - t[0]); }

Orientation orientation(const Triangle& t) {
  const int s = signed_area2(t).sign();
  if (s < 0) return Orientation::clockwise;
  if (s > 0) return Orientation::counterclockwise;
  return Orientation::degenerate;
}

bool is_degenerate(const Triangle& t) { return signed_area2(t).is_zero(); }

void require_nondegenerate(const Triangle& t) {
  if (is_degenerate(t)) throw DegenerateError("degenerate triangle " + format_triangle(t));
}

bool contains_point(const Triangle& t, const Vec2& p) {
  const int s0 = cross(t[1] - t[0], p - t[0]).sign();
  const int s1 = cross(t[2] - t[1], p - t[1]).sign();
  const int s2 = cross(t[0] - t[2], p - t[2]).sign();
  const bool has_neg = s0 < 0 || s1 < 0 || s2 < 0;
  const bool has_pos = s0 > 0 || s1 > 0 || s2 > 0;
  return !(has_neg && has_pos);
}

Triangle apply(const AffineMap2& f, const Triangle& t) {
  return {{apply(f, t[0]), apply(f, t[1]), apply(f, t[2])}};
}

Triangle mirror(const Triangle& t) {
  return apply(elementary::reflection(elementary::Mirror::x_axis), t);
}

HatParams HatParams::hat(Integer i, Integer j, Integer m) {
  return quadruple(std::move(i), std::move(j), std::move(m), 0);
}

HatParams HatParams::quadruple(Integer i, Integer j, Integer m, Integer n) {
  if (j <= 0 || m <= 0) throw DomainError("hat parameters need j > 0 and m > 0");
  if (n < 0 || n >= j) throw DomainError("hat parameters need 0 <= n < j");
  return HatParams(std::move(i), std::move(j), std::move(m), std::move(n));
}

Triangle HatParams::triangle() const { return {{Vec2{0, 0}, Vec2{i_, j_}, Vec2{m_, n_}}}; }

EncodingTriple::EncodingTriple(Integer i, Integer j, Integer m)
    : i_(std::move(i)), j_(std::move(j)), m_(std::move(m)) {
  if (j_ <= 0 || m_ <= 0 || is_even(i_) || is_even(j_) || is_even(m_) || i_ < 1 || i_ > 2 * j_ - 1) {
    throw DomainError("not an encoding triple: (" + i_.str() + "," + j_.str() + "," + m_.str() + ")");
  }
}

std::strong_ordering operator<=>(const EncodingTriple& a, const EncodingTriple& b) {
  if (const int c = a.i_.compare(b.i_); c != 0) return c <=> 0;
  if (const int c = a.j_.compare(b.j_); c != 0) return c <=> 0;
  return a.m_.compare(b.m_) <=> 0;
}

bool operator==(const BoundaryType& a, const BoundaryType& b) {
  for (std::size_t r = 0; r < 3; ++r) {
    if (a.sides_[0] == b.sides_[r] && a.sides_[1] == b.sides_[(r + 1) % 3] &&
        a.sides_[2] == b.sides_[(r + 2) % 3]) {
      return true;
    }
  }
  return false;
}

bool equal_up_to_reversal(const BoundaryType& a, const BoundaryType& b) {
  return a == b || a == b.reversed();
}

BoundaryType boundary_type(const Triangle& t) {
  require_nondegenerate(t);
  return {side_type(t[0], t[1]), side_type(t[1], t[2]), side_type(t[2], t[0])};
}

LegacyClass legacy_class(const HatParams& q) {
  const Integer& i = q.i();
  const Integer& j = q.j();
  const Integer& m = q.m();
  const Integer& n = q.n();
  if (i == 0 && n == 0 && is_odd(j) && is_odd(m) && j <= m) return LegacyClass::a;
  if (n == 0 && 0 < i && 2 * i <= m && is_odd(j) && j > 1 && gcd(i, j) != j) return LegacyClass::b;
  if (i != 0 && n != 0 && j <= m) {
    const Integer gij = gcd(i, j);
    const Integer gmn = gcd(m, n);
    if (gij != i && gij != j && gij != 1 && gmn != m && gmn != n && gmn != 1) return LegacyClass::c;
  }
  return LegacyClass::none;
}

void TransformTrace::push(std::string label, AffineMap2 map) {
  composed_ = compose(composed_, map);
  steps_.push_back({std::move(label), std::move(map)});
}

std::string format_triangle(const Triangle& t) {
  return format_point(t[0]) + ";" + format_point(t[1]) + ";" + format_point(t[2]);
}

namespace {

Integer read_integer(detail::Cursor& cur) {
  const Dyadic d = parse_dyadic(cur.token(",}"));
  if (!d.is_integer()) cur.fail("hat fields must be integers");
  return d.to_integer();
}

HatParams read_hat(detail::Cursor& cur) {
  cur.expect('T');
  cur.expect('{');
  Integer f[4] = {0, 0, 0, 0};
  int count = 0;
  do {
    if (count == 4) cur.fail("too many fields");
    f[count++] = read_integer(cur);
  } while (cur.consume(','));
  cur.expect('}');
  if (count < 3) cur.fail("expected T{i,j,m,n} or T{i,j,m}");
  return HatParams::quadruple(f[0], f[1], f[2], f[3]);
}

}  // namespace

HatParams parse_hat(std::string_view text) {
  detail::Cursor cur(text, "hat");
  HatParams h = read_hat(cur);
  cur.expect_end();
  return h;
}

Triangle parse_triangle(std::string_view text) {
  if (const auto t = detail::trim(text); !t.empty() && t.front() == 'T') {
    return parse_hat(t).triangle();
  }
  detail::Cursor cur(text, "triangle");
  Triangle t;
  for (int k = 0; k < 3; ++k) {
    if (k > 0) cur.expect(';');
    t.v[k] = detail::read_point(cur);
  }
  cur.expect_end();
  return t;
}

std::string format_hat(const HatParams& h) {
  return "T{" + h.i().str() + "," + h.j().str() + "," + h.m().str() + "," + h.n().str() + "}";
}

std::string format_triple(const EncodingTriple& e) {
  return "(" + e.i().str() + "," + e.j().str() + "," + e.m().str() + ")";
}

std::string format_boundary_type(const BoundaryType& b) {
  const auto& s = b.sides();
  return "(" + s[0].k().str() + "," + s[1].k().str() + "," + s[2].k().str() + ")";
}

std::string format_trace(const TransformTrace& trace) {
  std::string out;
  for (const auto& step : trace.steps()) {
    out += step.label + ": " + format_affine_map(step.map) + "\n";
  }
  return out;
}

std::string_view to_string(Orientation o) {
  switch (o) {
    case Orientation::clockwise:
      return "clockwise";
    case Orientation::counterclockwise:
      return "counterclockwise";
    case Orientation::degenerate:
      return "degenerate";
  }
  return "?";
}

std::string_view to_string(LegacyClass c) {
  switch (c) {
    case LegacyClass::a:
      return "a";
    case LegacyClass::b:
      return "b";
    case LegacyClass::c:
      return "c";
    case LegacyClass::none:
      return "none";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const Triangle& t) { return os << format_triangle(t); }
std::ostream& operator<<(std::ostream& os, const EncodingTriple& e) { return os << format_triple(e); }
std::ostream& operator<<(std::ostream& os, const BoundaryType& b) {
  return os << format_boundary_type(b);
}

}  // namespace dyadic
