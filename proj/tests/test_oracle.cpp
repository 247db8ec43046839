#include <algorithm>

#include "doctest.h"
#include "dyadic/errors.hpp"
#include "dyadic/oracle.hpp"
#include "support/generators.hpp"

using namespace dyadic;
using dyadic::testing::Gen;

namespace {

Dyadic d(const char* s) { return parse_dyadic(s); }
Vec2 pt(const char* x, const char* y) { return {d(x), d(y)}; }
Triangle unit_simplex() { return parse_triangle("(0,0);(1,0);(0,1)"); }

std::vector<Dyadic> grid(long long hi, int s) {
  std::vector<Dyadic> out;
  for (long long k = 0; k <= (hi << s); ++k) out.emplace_back(Integer(k), -s);
  return out;
}

// Plain quadratic closure, one full level at a time.
std::vector<Vec2> naive_closure(std::vector<Vec2> level, int steps) {
  std::sort(level.begin(), level.end());
  level.erase(std::unique(level.begin(), level.end()), level.end());
  for (int s = 0; s < steps; ++s) {
    std::vector<Vec2> next = level;
    for (const auto& p : level) {
      for (const auto& q : level) next.push_back(midpoint(p, q));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  return level;
}

}  // namespace

TEST_CASE("closure on the line") {
  const Dyadic unit[] = {Dyadic(0), Dyadic(1)};
  CHECK(closure(unit, 3).points == grid(1, 3));
  for (int s = 0; s <= 8; ++s) CHECK(closure(unit, s).points == grid(1, s));

  const Dyadic three[] = {Dyadic(0), Dyadic(3)};
  for (int s = 0; s <= 10; ++s) {
    const auto pts = closure(three, s).points;
    CHECK(std::find(pts.begin(), pts.end(), Dyadic(1)) == pts.end());
  }

  const Dyadic single[] = {d("5/8")};
  const auto one = closure(single, 4);
  CHECK(one.points == std::vector<Dyadic>{d("5/8")});
  CHECK(one.saturated);
  CHECK(one.steps_used == 1);

  const auto none = closure(unit, 0);
  CHECK(none.steps_used == 0);
  CHECK_FALSE(none.saturated);
  CHECK_THROWS_AS(closure(unit, -1), DomainError);
}

TEST_CASE("generates") {
  const Dyadic unit[] = {Dyadic(0), Dyadic(1)};
  auto r = generates(unit, Interval{0, 1}, 4);
  CHECK(r.generated);
  CHECK(r.step_budget == 10);
  CHECK(r.steps_used == 4);

  const Dyadic three[] = {Dyadic(0), Dyadic(3)};
  r = generates(three, Interval{0, 3}, 1);
  CHECK_FALSE(r.generated);
  REQUIRE(r.missing.has_value());
  CHECK(*r.missing == d("1/2"));
  CHECK(r.inconclusive);
  CHECK(r.step_budget == 4);

  const Vec2 corners[] = {pt("0", "0"), pt("1", "0"), pt("0", "1")};
  CHECK(generates(corners, unit_simplex(), 3).generated);
  CHECK(generates(corners, unit_simplex(), 4).generated);

  // two corners only reach the edge between them
  const Vec2 edge[] = {pt("0", "0"), pt("1", "0")};
  const auto g = generates(std::span<const Vec2>(edge), unit_simplex(), 1);
  CHECK_FALSE(g.generated);
  CHECK(*g.missing == pt("0", "1/2"));
  CHECK_FALSE(g.inconclusive);

  CHECK_THROWS_AS(generates(unit, Interval{1, 1}, 2), DegenerateError);
  CHECK_THROWS_AS(generates(corners, parse_triangle("(0,0);(1,1);(2,2)"), 2), DegenerateError);
  CHECK(default_step_budget(3) == 8);
}

TEST_CASE("enumerate_points") {
  CHECK(enumerate_points(unit_simplex(), 0).size() == 3);
  const auto pts = enumerate_points(unit_simplex(), 1);
  CHECK(pts.size() == 6);
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  CHECK(enumerate_points(Interval{d("-1/2"), d("3/4")}, 2).size() == 6);

  Gen gen(61);
  for (int trial = 0; trial < 30; ++trial) {
    const Triangle t = gen.triangle(8, -1);
    for (int depth = 0; depth <= 2; ++depth) {
      const auto coarse = enumerate_points(t, depth);
      const auto fine = enumerate_points(t, depth + 1);
      CHECK(std::includes(fine.begin(), fine.end(), coarse.begin(), coarse.end()));
      for (const auto& p : fine) CHECK(contains_point(t, p));
    }
  }
}

TEST_CASE("check_homomorphism") {
  const std::vector<PointPair> pairs = {{pt("0", "0"), pt("2", "0")}, {pt("1/2", "3"), pt("-5", "7/4")}};
  CHECK(check_homomorphism(elementary::translation(pt("1/2", "0")), pairs));
  CHECK(check_homomorphism(AffineMap2{Mat2{1, 2, 3, 4}, pt("1", "1")}, pairs));
  const auto square = [](const Vec2& p) { return Vec2{p.x * p.x, p.y * p.y}; };
  CHECK_FALSE(check_homomorphism(square, pairs));
  CHECK_FALSE(check_homomorphism(square, std::vector<PointPair>{{pt("0", "0"), pt("2", "0")}}));
}

TEST_CASE("property: closure matches a naive computation and is monotone") {
  Gen gen(62);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Vec2> gens;
    const int count = static_cast<int>(gen.range(1, 4));
    for (int k = 0; k < count; ++k) gens.push_back(gen.point(8, -1));
    const int steps = static_cast<int>(gen.range(0, 3));
    const auto r = closure(std::span<const Vec2>(gens), steps);
    CHECK(r.points == naive_closure(gens, steps));
    const auto next = closure(std::span<const Vec2>(gens), steps + 1);
    CHECK(std::includes(next.points.begin(), next.points.end(), r.points.begin(), r.points.end()));
    if (r.saturated) CHECK(next.points == r.points);
    for (const auto& g : gens) CHECK(std::binary_search(r.points.begin(), r.points.end(), g));
  }
}

TEST_CASE("property: closure commutes with affine maps") {
  Gen gen(63);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Vec2> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(gen.point(8, -1));
    const AffineMap2 f = gen.ga2();
    std::vector<Vec2> image;
    for (const auto& g : gens) image.push_back(apply(f, g));
    const int steps = static_cast<int>(gen.range(0, 3));
    std::vector<Vec2> mapped;
    for (const auto& p : closure(std::span<const Vec2>(gens), steps).points) mapped.push_back(apply(f, p));
    std::sort(mapped.begin(), mapped.end());
    CHECK(closure(std::span<const Vec2>(image), steps).points == mapped);
  }
}

TEST_CASE("property: random affine maps are homomorphisms") {
  Gen gen(64);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<PointPair> pairs;
    for (int k = 0; k < 5; ++k) pairs.emplace_back(gen.point(), gen.point());
    const AffineMap2 f{Mat2{gen.dyadic(), gen.dyadic(), gen.dyadic(), gen.dyadic()}, gen.point()};
    CHECK(check_homomorphism(f, pairs));
  }
}

TEST_CASE("rounding") {
  CHECK(floor_integer(d("-3/2")) == -2);
  CHECK(ceil_integer(d("-3/2")) == -1);
  CHECK(floor_integer(d("7/4")) == 1);
  CHECK(ceil_integer(d("7/4")) == 2);
  CHECK(floor_integer(Dyadic(8)) == 8);
}
