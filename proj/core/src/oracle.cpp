#include "dyadic/oracle.hpp"

#include <algorithm>
#include <set>

#include "dyadic/errors.hpp"

namespace dyadic {

Integer floor_integer(const Dyadic& x) {
  if (x.is_integer()) return x.to_integer();
  return floor_div(x.num(), pow2(-x.exp()));
}

Integer ceil_integer(const Dyadic& x) {
  if (x.is_integer()) return x.to_integer();
  return ceil_div(x.num(), pow2(-x.exp()));
}

namespace {

// Semi-naive closure: midpoints of old pairs were produced one level
// earlier, so each step only pairs the newest points with everything.
template <class Point>
class ClosureEngine {
 public:
  explicit ClosureEngine(std::span<const Point> generators)
      : level_(generators.begin(), generators.end()), frontier_(level_.begin(), level_.end()) {}

  // Returns false when the step added nothing.
  bool step() {
    std::set<Point> fresh;
    for (const Point& p : frontier_) {
      for (const Point& q : level_) {
        Point mid = midpoint(p, q);
        if (!level_.contains(mid)) fresh.insert(std::move(mid));
      }
    }
    level_.insert(fresh.begin(), fresh.end());
    frontier_.assign(fresh.begin(), fresh.end());
    return !fresh.empty();
  }

  const std::set<Point>& points() const { return level_; }

 private:
  std::set<Point> level_;
  std::vector<Point> frontier_;
};

template <class Point>
ClosureResult<Point> run_closure(std::span<const Point> generators, int steps) {
  if (steps < 0) throw DomainError("closure: negative step count");
  ClosureEngine<Point> engine(generators);
  ClosureResult<Point> result;
  bool saturated = false;
  while (result.steps_used < steps) {
    ++result.steps_used;
    if (!engine.step()) {
      saturated = true;
      break;
    }
  }
  // A finite set of two or more distinct points is never closed: the
  // midpoint of a closest pair is strictly closer to both ends.
  result.saturated = saturated || engine.points().size() <= 1;
  result.points.assign(engine.points().begin(), engine.points().end());
  return result;
}

bool strictly_inside(const Interval& r, const Dyadic& p) { return r.lo < p && p < r.hi; }

bool strictly_inside(const Triangle& t, const Vec2& p) {
  const int s0 = cross(t[1] - t[0], p - t[0]).sign();
  const int s1 = cross(t[2] - t[1], p - t[1]).sign();
  const int s2 = cross(t[0] - t[2], p - t[2]).sign();
  return s0 != 0 && s0 == s1 && s1 == s2;
}

template <class Point, class Region>
GenerationResult<Point> run_generates(std::span<const Point> generators, const Region& region, int depth,
                                      std::optional<int> step_budget) {
  if (depth < 0) throw DomainError("generates: negative depth");
  const std::vector<Point> targets = enumerate_points(region, depth);
  GenerationResult<Point> result;
  result.step_budget = step_budget.value_or(default_step_budget(depth));
  if (result.step_budget < 0) throw DomainError("generates: negative step budget");

  ClosureEngine<Point> engine(generators);
  bool saturated = false;
  for (;;) {
    const auto& pts = engine.points();
    auto missing = std::find_if(targets.begin(), targets.end(),
                                [&](const Point& p) { return !pts.contains(p); });
    if (missing == targets.end()) {
      result.generated = true;
      return result;
    }
    if (saturated || result.steps_used == result.step_budget) {
      result.missing = *missing;
      result.inconclusive = !saturated && strictly_inside(region, *missing);
      return result;
    }
    ++result.steps_used;
    saturated = !engine.step();
  }
}

}  // namespace

ClosureResult<Dyadic> closure(std::span<const Dyadic> generators, int steps) {
  return run_closure(generators, steps);
}

ClosureResult<Vec2> closure(std::span<const Vec2> generators, int steps) {
  return run_closure(generators, steps);
}

int default_step_budget(int depth) { return 2 * depth + 2; }

GenerationResult<Dyadic> generates(std::span<const Dyadic> generators, const Interval& region, int depth,
                                   std::optional<int> step_budget) {
  if (!(region.lo < region.hi)) throw DegenerateError("generates: empty or degenerate interval");
  return run_generates(generators, region, depth, step_budget);
}

GenerationResult<Vec2> generates(std::span<const Vec2> generators, const Triangle& region, int depth,
                                 std::optional<int> step_budget) {
  require_nondegenerate(region);
  return run_generates(generators, region, depth, step_budget);
}

std::vector<Dyadic> enumerate_points(const Interval& region, int depth) {
  if (depth < 0) throw DomainError("enumerate_points: negative depth");
  std::vector<Dyadic> out;
  const Integer lo = ceil_integer(region.lo.scaled(depth));
  const Integer hi = floor_integer(region.hi.scaled(depth));
  for (Integer k = lo; k <= hi; ++k) out.emplace_back(k, -depth);
  return out;
}

std::vector<Vec2> enumerate_points(const Triangle& region, int depth) {
  if (depth < 0) throw DomainError("enumerate_points: negative depth");
  require_nondegenerate(region);
  const auto [xmin, xmax] = std::minmax({region[0].x, region[1].x, region[2].x});
  const auto [ymin, ymax] = std::minmax({region[0].y, region[1].y, region[2].y});
  const Integer x0 = ceil_integer(xmin.scaled(depth)), x1 = floor_integer(xmax.scaled(depth));
  const Integer y0 = ceil_integer(ymin.scaled(depth)), y1 = floor_integer(ymax.scaled(depth));
  std::vector<Vec2> out;
  for (Integer x = x0; x <= x1; ++x) {
    for (Integer y = y0; y <= y1; ++y) {
      Vec2 p{Dyadic(x, -depth), Dyadic(y, -depth)};
      if (contains_point(region, p)) out.push_back(std::move(p));
    }
  }
  return out;  // x-major scan is already lexicographic
}

bool check_homomorphism(const std::function<Vec2(const Vec2&)>& f, std::span<const PointPair> pairs) {
  return std::all_of(pairs.begin(), pairs.end(), [&](const PointPair& pq) {
    return f(midpoint(pq.first, pq.second)) == midpoint(f(pq.first), f(pq.second));
  });
}

bool check_homomorphism(const AffineMap2& f, std::span<const PointPair> pairs) {
  return check_homomorphism([&f](const Vec2& p) { return apply(f, p); }, pairs);
}

}  // namespace dyadic
