#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dyadic/affine2.hpp"
#include "dyadic/dyadic.hpp"
#include "dyadic/intervals.hpp"

namespace dyadic {

/// Three ordered vertices of the dyadic plane. Construction does not reject
/// collinear input; operations that need a proper triangle throw
/// DegenerateError.
struct Triangle {
  std::array<Vec2, 3> v;

  const Vec2& operator[](std::size_t i) const { return v[i]; }

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

enum class Orientation { clockwise, counterclockwise, degenerate };

/// (x1 - x0)(y2 - y0) - (y1 - y0)(x2 - x0); negative means clockwise.
Dyadic signed_area2(const Triangle& t);
Orientation orientation(const Triangle& t);
bool is_degenerate(const Triangle& t);

/// Throws DegenerateError for collinear vertices.
void require_nondegenerate(const Triangle& t);

/// Exact membership in the closed real hull of t.
bool contains_point(const Triangle& t, const Vec2& p);

Triangle apply(const AffineMap2& f, const Triangle& t);

/// Image under the reflection (x, y) -> (x, -y).
Triangle mirror(const Triangle& t);

/// T_{i,j,m,n}: vertices A = (0,0), B = (i,j), C = (m,n).
class HatParams {
 public:
  /// T_{i,j,m,0} for any integer i and positive j, m.
  static HatParams hat(Integer i, Integer j, Integer m);
  /// T_{i,j,m,n} with 0 <= n < j.
  static HatParams quadruple(Integer i, Integer j, Integer m, Integer n);

  const Integer& i() const noexcept { return i_; }
  const Integer& j() const noexcept { return j_; }
  const Integer& m() const noexcept { return m_; }
  const Integer& n() const noexcept { return n_; }

  Triangle triangle() const;

  friend bool operator==(const HatParams&, const HatParams&) = default;

 private:
  HatParams(Integer i, Integer j, Integer m, Integer n)
      : i_(std::move(i)), j_(std::move(j)), m_(std::move(m)), n_(std::move(n)) {}

  Integer i_, j_, m_, n_;
};

/// (i, j, m), all odd, with 1 <= i <= 2j - 1: the complete invariant of
/// pointed oriented isomorphism.
class EncodingTriple {
 public:
  /// Throws DomainError if the fields violate the invariants.
  EncodingTriple(Integer i, Integer j, Integer m);

  const Integer& i() const noexcept { return i_; }
  const Integer& j() const noexcept { return j_; }
  const Integer& m() const noexcept { return m_; }

  friend bool operator==(const EncodingTriple&, const EncodingTriple&) = default;
  friend std::strong_ordering operator<=>(const EncodingTriple& a, const EncodingTriple& b);

 private:
  Integer i_, j_, m_;
};

/// Side types (r, s, t) of edges v0v1, v1v2, v2v0. Equality is up to
/// rotation; the reversed triple is a different value.
class BoundaryType {
 public:
  BoundaryType(IntervalType r, IntervalType s, IntervalType t) : sides_{std::move(r), std::move(s), std::move(t)} {}

  const std::array<IntervalType, 3>& sides() const noexcept { return sides_; }
  BoundaryType reversed() const { return {sides_[2], sides_[1], sides_[0]}; }

  friend bool operator==(const BoundaryType& a, const BoundaryType& b);

 private:
  std::array<IntervalType, 3> sides_;
};

bool equal_up_to_reversal(const BoundaryType& a, const BoundaryType& b);

BoundaryType boundary_type(const Triangle& t);

enum class LegacyClass { a, b, c, none };

/// The three-clause classification of pointed triangles T_{i,j,m,n}
/// (right triangles, hat triangles, others), evaluated literally.
LegacyClass legacy_class(const HatParams& q);

struct TraceStep {
  std::string label;
  AffineMap2 map;
};

/// Ordered elementary maps with their running composition.
class TransformTrace {
 public:
  void push(std::string label, AffineMap2 map);

  const std::vector<TraceStep>& steps() const noexcept { return steps_; }
  const AffineMap2& composed() const noexcept { return composed_; }

 private:
  std::vector<TraceStep> steps_;
  AffineMap2 composed_;
};

// Text forms.
std::string format_triangle(const Triangle& t);  // (x,y);(x,y);(x,y)
/// Three points separated by ';', or a hat literal `T{i,j,m,n}` / `T{i,j,m}`.
Triangle parse_triangle(std::string_view text);
std::string format_hat(const HatParams& h);  // T{i,j,m,n}
HatParams parse_hat(std::string_view text);
std::string format_triple(const EncodingTriple& e);  // (i,j,m)
std::string format_boundary_type(const BoundaryType& b);  // (r,s,t)
std::string format_trace(const TransformTrace& trace);  // label: [[a,b],[c,d]]+(tx,ty) per line
std::string_view to_string(Orientation o);
std::string_view to_string(LegacyClass c);

std::ostream& operator<<(std::ostream& os, const Triangle& t);
std::ostream& operator<<(std::ostream& os, const EncodingTriple& e);
std::ostream& operator<<(std::ostream& os, const BoundaryType& b);

}  // namespace dyadic
