#pragma once

#include <iosfwd>

#include "dyadic/affine2.hpp"
#include "dyadic/dyadic.hpp"

namespace dyadic {

/// Isomorphism type of a dyadic interval: [d, d + k 2^n] is isomorphic to
/// D_k = [0, k] for the odd positive integer k.
class IntervalType {
 public:
  /// Throws DomainError unless k is odd and positive.
  explicit IntervalType(Integer k);

  const Integer& k() const noexcept { return k_; }

  friend bool operator==(const IntervalType&, const IntervalType&) = default;
  friend auto operator<=>(const IntervalType& a, const IntervalType& b) {
    return a.k_.compare(b.k_) <=> 0;
  }

 private:
  Integer k_;
};

/// Odd part of |b - a|. Throws DegenerateError when a == b.
IntervalType interval_type(const Dyadic& a, const Dyadic& b);

/// Type of the segment pq: the direction q - p is scaled by a power of two
/// to integer coordinates with at least one of them odd; the type is the gcd
/// of their absolute values. Throws DegenerateError when p == q.
IntervalType side_type(const Vec2& p, const Vec2& q);

std::ostream& operator<<(std::ostream& os, const IntervalType& t);

}  // namespace dyadic
