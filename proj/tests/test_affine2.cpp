#include "doctest.h"
#include "dyadic/affine2.hpp"
#include "dyadic/errors.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace dyadic;
using dyadic::testing::Gen;

namespace {

Vec2 pt(const char* x, const char* y) { return {parse_dyadic(x), parse_dyadic(y)}; }
AffineMap2 linear(const Mat2& m) { return {m, {}}; }

}  // namespace

TEST_CASE("det_invertible") {
  const Dyadic k = parse_dyadic("3/8");
  auto shear = det_invertible(Mat2{1, 0, k, 1});
  CHECK(shear.det == Dyadic(1));
  CHECK(shear.invertible);

  auto m = det_invertible(Mat2{1, 2, 3, 4});
  CHECK(m.det == Dyadic(-2));
  CHECK(m.invertible);

  auto three = det_invertible(Mat2{3, 0, 0, 1});
  CHECK(three.det == Dyadic(3));
  CHECK_FALSE(three.invertible);

  CHECK_FALSE(det_invertible(Mat2{1, 2, 2, 4}).invertible);
  CHECK_THROWS_AS(inverse(Mat2{3, 0, 0, 1}), DomainError);
}

TEST_CASE("apply uses row vectors") {
  // (10, 6) [[2,-3],[-3,5]] = (20 - 18, -30 + 30)
  CHECK(apply(linear(Mat2{2, -3, -3, 5}), Vec2{10, 6}) == Vec2{2, 0});
  CHECK(apply(linear(Mat2{1, 0, -1, 1}), Vec2{7, 7}) == Vec2{0, 7});
  CHECK(apply(linear(Mat2{parse_dyadic("1/2"), 0, parse_dyadic("1/2"), 1}), Vec2{1, 3}) == Vec2{2, 3});
  CHECK(apply(AffineMap2{Mat2{}, Vec2{1, 2}}, Vec2{3, 4}) == Vec2{4, 6});
}

TEST_CASE("compose and inverse") {
  const AffineMap2 t = elementary::translation({1, 2});
  CHECK(inverse(t) == elementary::translation({-1, -2}));
  CHECK(inverse(elementary::scale(1, 0)) == linear(Mat2::diagonal(parse_dyadic("1/2"), 1)));

  const AffineMap2 f{Mat2{1, 2, 3, 4}, pt("1/2", "-3")};
  CHECK(compose(f, inverse(f)) == AffineMap2::identity());
  CHECK(compose(inverse(f), f) == AffineMap2::identity());

  const AffineMap2 g = compose(elementary::shear(3), elementary::translation({5, 0}));
  const Vec2 p = pt("3/4", "-1/8");
  CHECK(apply(compose(f, g), p) == apply(g, apply(f, p)));
  CHECK_THROWS_AS(inverse(linear(Mat2{3, 0, 0, 1})), DomainError);
}

TEST_CASE("bezout canonical solutions") {
  auto s = bezout(5, 3);
  CHECK(s.x == 3);
  CHECK(s.y == 2);
  s = bezout(1, 0);
  CHECK(s.x == 0);
  CHECK(s.y == 1);
  s = bezout(3, 5);
  CHECK(s.x == 1);
  CHECK(s.y == 2);
  s = bezout(-1, 0);
  CHECK(s.y == -1);
  s = bezout(0, 1);
  CHECK(s.x == -1);
  CHECK(s.y == 0);
  s = bezout(7, -1);
  CHECK(s.x == 1);
  CHECK(s.y == 0);

  CHECK_THROWS_AS(bezout(6, 4), DomainError);
  CHECK_THROWS_AS(bezout(0, 0), DomainError);
  CHECK_THROWS_AS(bezout(3, 0), DomainError);
}

TEST_CASE("bezout agrees with a brute-force search") {
  for (long long a = -30; a <= 30; ++a) {
    for (long long b = -30; b <= 30; ++b) {
      if (std::abs(b) < 2) continue;
      const auto expected = dyadic::testing::brute_bezout(a, b);
      if (gcd(Integer(a), Integer(b)) != 1) {
        CHECK_FALSE(expected.has_value());
        CHECK_THROWS_AS(bezout(a, b), DomainError);
        continue;
      }
      REQUIRE(expected.has_value());
      const auto s = bezout(a, b);
      CHECK(s.x == expected->first);
      CHECK(s.y == expected->second);
    }
  }
}

TEST_CASE("elementary constructors") {
  using namespace elementary;
  CHECK(on_axis(5, 3) == linear(Mat2{2, -3, -3, 5}));
  CHECK(apply(on_axis(5, 3), Vec2{10, 6}) == Vec2{2, 0});
  CHECK(apply(shear(-1), Vec2{3, 3}) == Vec2{0, 3});
  CHECK(apply(scale(1, 1), pt("1/2", "3/2")) == Vec2{1, 3});
  CHECK(apply(halving(), Vec2{1, 3}) == Vec2{2, 3});
  CHECK(apply(reflection(Mirror::x_axis), Vec2{1, 2}) == Vec2{1, -2});
  CHECK(apply(reflection(Mirror::y_axis), Vec2{1, 2}) == Vec2{-1, 2});
  CHECK(apply(reflection(Mirror::diagonal), Vec2{1, 2}) == Vec2{2, 1});
  CHECK(apply(reflection(Mirror::antidiagonal), Vec2{1, 2}) == Vec2{-2, -1});
  CHECK(apply(on_axis(0, 1), Vec2{0, 7}) == Vec2{7, 0});
  CHECK(apply(on_axis(-2, -3), Vec2{-8, -12}) == Vec2{4, 0});
  CHECK(on_axis(5, 3).linear.det() == Dyadic(1));
  CHECK_THROWS_AS(on_axis(4, 2), DomainError);
}

TEST_CASE("matrix literal") {
  const AffineMap2 f = parse_affine_map("[[1/2, -3],[0, 5*2^-3]] + (1,-1/4)");
  CHECK(f.linear == Mat2{parse_dyadic("1/2"), -3, 0, parse_dyadic("5/8")});
  CHECK(f.shift == pt("1", "-1/4"));
  CHECK(format_affine_map(f) == "[[1/2,-3],[0,5/8]]+(1,-1/4)");
  CHECK(parse_affine_map("[[1,0],[0,1]]") == AffineMap2::identity());
  CHECK_THROWS_AS(parse_affine_map("[[1,0],[0,1]"), ParseError);
  CHECK_THROWS_AS(parse_affine_map("[[1,0],[0,1/3]]"), ParseError);
  CHECK_THROWS_AS(parse_affine_map("[[1,0],[0,1]]+(1,2) x"), ParseError);
  CHECK(parse_point(" ( -3/2 , 4 ) ") == pt("-3/2", "4"));
}

TEST_CASE("property: group laws") {
  Gen gen(11);
  for (int trial = 0; trial < 500; ++trial) {
    const AffineMap2 f = gen.ga2(), g = gen.ga2();
    CHECK(compose(f, g).linear.det() == f.linear.det() * g.linear.det());
    CHECK(is_invertible(f));
    const Vec2 p = gen.point(), q = gen.point();
    CHECK(apply(compose(f, g), p) == apply(g, apply(f, p)));
    CHECK(apply(inverse(f), apply(f, p)) == p);
    CHECK(apply(f, midpoint(p, q)) == midpoint(apply(f, p), apply(f, q)));
    CHECK(parse_affine_map(format_affine_map(f)) == f);
  }
}

TEST_CASE("property: every elementary constructor is invertible over D") {
  using namespace elementary;
  Gen gen(12);
  for (int trial = 0; trial < 300; ++trial) {
    const Integer a = gen.range(-200, 200), b = gen.range(-200, 200);
    std::vector<AffineMap2> maps = {
        translation(gen.point()),
        reflection(static_cast<Mirror>(gen.range(0, 3))),
        scale(gen.range(-10, 10), gen.range(-10, 10)),
        shear(gen.dyadic(1 << 8, -8, 4)),
        halving(),
    };
    if (gcd(a, b) == 1) {
      maps.push_back(on_axis(a, b, gen.range(-5, 5)));
      const auto s = bezout(a, b);
      CHECK(a * s.y - b * s.x == 1);
      const Integer g = gen.range(1, 50);
      CHECK(apply(on_axis(a, b), Vec2{Integer(g * a), Integer(g * b)}) == Vec2{g, 0});
    }
    for (const auto& m : maps) {
      const auto info = det_invertible(m.linear);
      CHECK(info.invertible);
      CHECK(abs(info.det.num()) == 1);
    }
  }
}
