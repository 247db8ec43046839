#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dyadic/affine2.hpp"
#include "dyadic/triangle.hpp"

namespace dyadic {

/// Bounded breadth-first midpoint closure. Level 0 is the generator set and
/// level s + 1 adds every midpoint of two points of level s.
template <class Point>
struct ClosureResult {
  std::vector<Point> points;  // sorted, without duplicates
  int steps_used = 0;
  bool saturated = false;  // one more step would add nothing
};

ClosureResult<Dyadic> closure(std::span<const Dyadic> generators, int steps);
ClosureResult<Vec2> closure(std::span<const Vec2> generators, int steps);

/// Closed dyadic interval [lo, hi], lo < hi.
struct Interval {
  Dyadic lo, hi;
};

template <class Point>
struct GenerationResult {
  bool generated = false;
  std::optional<Point> missing;  // least grid point not reached, when !generated
  int step_budget = 0;
  int steps_used = 0;
  // The missing point is interior and the closure had not saturated, so a
  // larger budget might still reach it.
  bool inconclusive = false;
};

/// 2 d + 2.
int default_step_budget(int depth);

/// Whether every point of the region on the 2^-depth grid lies in the
/// closure of the generators after at most step_budget steps.
GenerationResult<Dyadic> generates(std::span<const Dyadic> generators, const Interval& region, int depth,
                                   std::optional<int> step_budget = std::nullopt);
GenerationResult<Vec2> generates(std::span<const Vec2> generators, const Triangle& region, int depth,
                                 std::optional<int> step_budget = std::nullopt);

/// Points of the closed region on the 2^-depth grid, sorted.
std::vector<Dyadic> enumerate_points(const Interval& region, int depth);
std::vector<Vec2> enumerate_points(const Triangle& region, int depth);

using PointPair = std::pair<Vec2, Vec2>;

/// f(midpoint(p, q)) == midpoint(f(p), f(q)) for every sampled pair.
bool check_homomorphism(const std::function<Vec2(const Vec2&)>& f, std::span<const PointPair> pairs);
bool check_homomorphism(const AffineMap2& f, std::span<const PointPair> pairs);

// Integer rounding of dyadic values.
Integer floor_integer(const Dyadic& x);
Integer ceil_integer(const Dyadic& x);

}  // namespace dyadic
