#include "dyadic/integer.hpp"

#include <cassert>

#include "dyadic/errors.hpp"

namespace dyadic {

std::int64_t trailing_zeros(const Integer& n) {
  assert(n != 0);
  return static_cast<std::int64_t>(boost::multiprecision::lsb(abs(n)));
}

Integer strip_twos(const Integer& n) { return shift(n, -trailing_zeros(n)); }

Integer pow2(std::int64_t k) {
  if (k < 0) throw DomainError("pow2: negative exponent");
  Integer r = 1;
  r <<= static_cast<unsigned>(k);
  return r;
}

Integer shift(const Integer& n, std::int64_t k) {
  if (k == 0 || n == 0) return n;
  Integer mag = abs(n);
  if (k > 0) {
    mag <<= static_cast<unsigned>(k);
  } else {
    assert(boost::multiprecision::lsb(mag) >= static_cast<unsigned>(-k));
    mag >>= static_cast<unsigned>(-k);
  }
  return n < 0 ? Integer(-mag) : mag;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs(a), y = abs(b);
  while (y != 0) {
    Integer r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Integer floor_div(const Integer& a, const Integer& b) {
  assert(b > 0);
  Integer q = a / b;  // truncates toward zero
  if (a < 0 && q * b != a) --q;
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  assert(b > 0);
  Integer q = a / b;
  if (a > 0 && q * b != a) ++q;
  return q;
}

Integer mod_floor(const Integer& a, const Integer& b) { return a - floor_div(a, b) * b; }

}  // namespace dyadic
