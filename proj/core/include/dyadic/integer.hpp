#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace dyadic {

using Integer = boost::multiprecision::cpp_int;

/// Number of trailing zero bits of a non-zero integer, i.e. its 2-adic valuation.
std::int64_t trailing_zeros(const Integer& n);

/// n with every factor of two removed (sign kept). n must be non-zero.
Integer strip_twos(const Integer& n);

Integer pow2(std::int64_t k);

/// Multiply or divide by 2^k on the magnitude; the sign is preserved and
/// right shifts must be exact.
Integer shift(const Integer& n, std::int64_t k);

/// gcd of absolute values; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);

// Division helpers for a positive divisor.
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& b);

inline bool is_odd(const Integer& n) { return boost::multiprecision::bit_test(abs(n), 0); }
inline bool is_even(const Integer& n) { return !is_odd(n); }

}  // namespace dyadic
