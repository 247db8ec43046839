#include "dyadic/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

#include "dyadic/errors.hpp"

namespace dyadic {

PointedRoles pointed_roles(const Triangle& t, std::size_t vertex) {
  if (vertex > 2) throw std::out_of_range("vertex index must be 0, 1 or 2");
  require_nondegenerate(t);
  const std::size_t next = (vertex + 1) % 3, last = (vertex + 2) % 3;
  const Triangle cyclic{{t[vertex], t[next], t[last]}};
  if (orientation(cyclic) == Orientation::clockwise) return {vertex, next, last};
  return {vertex, last, next};
}

Dyadic minimal_depth_shear(const ShearWindow& w) {
  // smallest n with n / 2^e >= -i/j, accepted once n / 2^e <= (m - i)/j
  for (std::int64_t e = 0;; ++e) {
    const Integer scale = pow2(e);
    const Integer n = ceil_div(-w.i * scale, w.j);
    if (n * w.j <= (w.m - w.i) * scale) return Dyadic(n, -e);
  }
}

Integer odd_representative(const Integer& i, const Integer& j) {
  const Integer r = mod_floor(i, j);
  return is_odd(r) ? r : Integer(r + j);
}

namespace {

// Tracks the images of A, B, C while elementary maps are appended.
class Frame {
 public:
  Frame(const Triangle& t, PointedRoles roles) : roles_(roles), a_(t[roles.a]), b_(t[roles.b]), c_(t[roles.c]) {}

  void step(std::string label, const AffineMap2& f) {
    if (f == AffineMap2::identity()) return;
    a_ = apply(f, a_);
    b_ = apply(f, b_);
    c_ = apply(f, c_);
    trace_.push(std::move(label), f);
  }

  const Vec2& a() const { return a_; }
  const Vec2& b() const { return b_; }
  const Vec2& c() const { return c_; }
  const PointedRoles& roles() const { return roles_; }
  TransformTrace take_trace() { return std::move(trace_); }

 private:
  PointedRoles roles_;
  Vec2 a_, b_, c_;
  TransformTrace trace_;
};

std::int64_t denominator_depth(const Dyadic& d) { return d.is_zero() ? 0 : std::max<std::int64_t>(0, -d.exp()); }

// Brings the frame to A = (0,0), B = (i,j), C = (m,0) with integer i, j > 0,
// m > 0, j odd and gcd(i, m) odd.
void normalize(Frame& f, const PipelineChoices& choices) {
  f.step("translate", elementary::translation(-f.a()));

  const std::int64_t s = std::max({denominator_depth(f.b().x), denominator_depth(f.b().y),
                                   denominator_depth(f.c().x), denominator_depth(f.c().y)});
  if (s > 0) f.step("clear-denominators", elementary::scale(s, s));

  {
    const Integer cx = f.c().x.to_integer(), cy = f.c().y.to_integer();
    const Integer g = gcd(cx, cy);
    f.step("on-axis", elementary::on_axis(Integer(cx / g), Integer(cy / g), choices.bezout_variant));
  }
  if (!f.c().y.is_zero() || f.c().x.sign() <= 0 || f.b().y.sign() <= 0) {
    throw std::logic_error("on-axis step did not reach the upper halfplane form");
  }

  {
    ShearWindow w{f.b().x.to_integer(), f.b().y.to_integer(), f.c().x.to_integer()};
    Dyadic c;
    if (choices.shear) {
      c = choices.shear(w);
    } else if (w.i < 0 || w.i > w.m) {
      c = minimal_depth_shear(w);
    }
    f.step("shear", elementary::shear(c));
    if (const std::int64_t e = denominator_depth(f.b().x); e > 0) {
      f.step("clear-x-denominator", elementary::scale(e, 0));
    }
  }

  const Integer i = f.b().x.to_integer(), j = f.b().y.to_integer(), m = f.c().x.to_integer();
  if (const std::int64_t v = trailing_zeros(j); v > 0) f.step("make-j-odd", elementary::scale(0, -v));
  const std::int64_t w = i == 0 ? trailing_zeros(m) : std::min(trailing_zeros(i), trailing_zeros(m));
  if (w > 0) f.step("make-gcd-odd", elementary::scale(-w, 0));
}

}  // namespace

NormalizedHat normalize_pointed(const Triangle& t, std::size_t vertex, const PipelineChoices& choices) {
  Frame f(t, pointed_roles(t, vertex));
  normalize(f, choices);
  HatParams hat = HatParams::hat(f.b().x.to_integer(), f.b().y.to_integer(), f.c().x.to_integer());
  return {std::move(hat), f.take_trace(), f.roles()};
}

Representative to_representative(const Triangle& t, std::size_t vertex, const PipelineChoices& choices) {
  Frame f(t, pointed_roles(t, vertex));
  normalize(f, choices);

  // each halving strictly lowers v2(m)
  for (;;) {
    if (is_even(f.b().x.to_integer())) f.step("shift-odd", elementary::shear(1));
    if (is_odd(f.c().x.to_integer())) break;
    f.step("halve", elementary::halving());
  }

  const Integer i = f.b().x.to_integer(), j = f.b().y.to_integer(), m = f.c().x.to_integer();
  Integer canonical = odd_representative(i, j);
  f.step("canonical-residue", elementary::shear(Dyadic(Integer((canonical - i) / j))));

  TransformTrace trace = f.take_trace();
  const Triangle hat{{Vec2{0, 0}, Vec2{canonical, j}, Vec2{m, 0}}};
  const auto roles = f.roles();
  const Triangle mapped = apply(trace.composed(), Triangle{{t[roles.a], t[roles.b], t[roles.c]}});
  const Dyadic det = trace.composed().linear.det();
  if (mapped != hat || det.sign() <= 0 || abs(det.num()) != 1) {
    throw std::logic_error("representative trace does not reproduce the canonical hat");
  }
  return {EncodingTriple(std::move(canonical), j, m), std::move(trace), roles};
}

EncodingTriple encode(const Triangle& t, std::size_t vertex, const PipelineChoices& choices) {
  return to_representative(t, vertex, choices).triple;
}

}  // namespace dyadic
