#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "dyadic/integer.hpp"

namespace dyadic {

/// An exact element of Z[1/2], stored as num * 2^exp.
///
/// The representation is canonical: num is odd, or num == 0 and exp == 0.
/// Equality of values is therefore equality of fields, and the 2-adic
/// valuation and odd part are plain field reads.
class Dyadic {
 public:
  Dyadic() = default;

  template <std::integral T>
  Dyadic(T value) : num_(value) {  // NOLINT(google-explicit-constructor)
    normalize();
  }
  Dyadic(const Integer& value);  // NOLINT(google-explicit-constructor)
  Dyadic(Integer num, std::int64_t exp);

  /// 2^k for any integer k.
  static Dyadic pow2(std::int64_t k);

  const Integer& num() const noexcept { return num_; }
  std::int64_t exp() const noexcept { return exp_; }

  int sign() const noexcept { return num_.sign(); }
  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return exp_ >= 0; }

  /// The integer value; throws DomainError when the value has a denominator.
  Integer to_integer() const;

  /// this * 2^k.
  Dyadic scaled(std::int64_t k) const;
  Dyadic abs() const;

  Dyadic operator-() const;
  Dyadic& operator+=(const Dyadic& rhs);
  Dyadic& operator-=(const Dyadic& rhs);
  Dyadic& operator*=(const Dyadic& rhs);

  friend Dyadic operator+(Dyadic lhs, const Dyadic& rhs) { return lhs += rhs; }
  friend Dyadic operator-(Dyadic lhs, const Dyadic& rhs) { return lhs -= rhs; }
  friend Dyadic operator*(Dyadic lhs, const Dyadic& rhs) { return lhs *= rhs; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) noexcept {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  void normalize();

  Integer num_{0};
  std::int64_t exp_{0};
};

/// The arithmetic mean (x + y) / 2.
Dyadic midpoint(const Dyadic& x, const Dyadic& y);

struct Valuation {
  std::int64_t valuation;
  Integer odd_part;  // carries the sign
};

/// x = odd_part * 2^valuation. Throws DomainError("valuation of zero") for x == 0.
Valuation val2(const Dyadic& x);

/// Accepts `[+-]n`, `[+-]p/q` with q a positive power of two, and `[+-]n*2^e`.
Dyadic parse_dyadic(std::string_view text);

/// Integer form when exp >= 0, otherwise `p/q` with p odd and q = 2^-exp.
std::string format_dyadic(const Dyadic& x);

std::ostream& operator<<(std::ostream& os, const Dyadic& x);

}  // namespace dyadic
