#include "dyadic/intervals.hpp"

#include <algorithm>
#include <ostream>

#include "dyadic/errors.hpp"

namespace dyadic {

IntervalType::IntervalType(Integer k) : k_(std::move(k)) {
  if (k_ <= 0 || is_even(k_)) throw DomainError("interval type must be odd and positive, got " + k_.str());
}

IntervalType interval_type(const Dyadic& a, const Dyadic& b) {
  if (a == b) throw DegenerateError("degenerate interval [" + format_dyadic(a) + "," + format_dyadic(b) + "]");
  return IntervalType(abs((b - a).num()));
}

IntervalType side_type(const Vec2& p, const Vec2& q) {
  if (p == q) throw DegenerateError("degenerate side " + format_point(p) + format_point(q));
  const Vec2 d = q - p;
  if (d.x.is_zero()) return IntervalType(abs(d.y.num()));
  if (d.y.is_zero()) return IntervalType(abs(d.x.num()));
  // multiply by 2^-e where e is the smaller exponent: that coordinate stays odd
  const std::int64_t e = std::min(d.x.exp(), d.y.exp());
  return IntervalType(gcd(d.x.scaled(-e).to_integer(), d.y.scaled(-e).to_integer()));
}

std::ostream& operator<<(std::ostream& os, const IntervalType& t) { return os << t.k(); }

}  // namespace dyadic
