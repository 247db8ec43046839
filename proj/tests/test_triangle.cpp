#include "doctest.h"
#include "dyadic/errors.hpp"
#include "dyadic/triangle.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace dyadic;
using dyadic::testing::Gen;

namespace {

Triangle tri(const char* text) { return parse_triangle(text); }
Vec2 pt(const char* x, const char* y) { return {parse_dyadic(x), parse_dyadic(y)}; }
BoundaryType bt(long long r, long long s, long long t) {
  return {IntervalType(r), IntervalType(s), IntervalType(t)};
}

}  // namespace

TEST_CASE("orientation and signed area") {
  const Triangle cw = tri("(0,0);(1,3);(19,0)");
  CHECK(orientation(cw) == Orientation::clockwise);
  CHECK(signed_area2(cw) == Dyadic(-57));
  const Triangle ccw = tri("(0,0);(19,0);(1,3)");
  CHECK(orientation(ccw) == Orientation::counterclockwise);
  CHECK(signed_area2(ccw) == Dyadic(57));
  const Triangle flat = tri("(0,0);(1,1);(2,2)");
  CHECK(orientation(flat) == Orientation::degenerate);
  CHECK(signed_area2(flat) == Dyadic(0));
  CHECK(is_degenerate(flat));
  CHECK_THROWS_AS(require_nondegenerate(flat), DegenerateError);
  CHECK(is_degenerate(tri("(1,1);(1,1);(3,5)")));
}

TEST_CASE("contains_point") {
  const Triangle unit = tri("(0,0);(1,0);(0,1)");
  CHECK(contains_point(unit, pt("1/4", "1/4")));
  CHECK_FALSE(contains_point(unit, pt("3/4", "3/4")));
  CHECK(contains_point(unit, pt("1/2", "1/2")));
  CHECK(contains_point(unit, pt("0", "0")));
  CHECK_FALSE(contains_point(unit, pt("-1/1024", "0")));
  CHECK(contains_point(tri("(0,1);(0,0);(1,0)"), pt("1/8", "3/4")));
}

TEST_CASE("boundary_type") {
  CHECK(boundary_type(HatParams::quadruple(0, 3, 19, 0).triangle()) == bt(3, 1, 19));
  const Triangle t1 = tri("(0,0);(1,1);(2,0)");
  const Triangle t3 = tri("(0,0);(1,3);(2,0)");
  CHECK(boundary_type(t1) == bt(1, 1, 1));
  CHECK(boundary_type(t3) == bt(1, 1, 1));
  CHECK(signed_area2(t3) == Dyadic(3) * signed_area2(t1));
  // rotation is the same value, reversal is not
  CHECK(bt(3, 1, 19) == bt(1, 19, 3));
  CHECK_FALSE(bt(3, 1, 19) == bt(19, 1, 3));
  CHECK(equal_up_to_reversal(bt(3, 1, 19), bt(19, 1, 3)));
  CHECK_FALSE(equal_up_to_reversal(bt(3, 1, 19), bt(3, 3, 19)));
  CHECK(format_boundary_type(bt(3, 1, 19)) == "(3,1,19)");
}

TEST_CASE("legacy_class") {
  CHECK(legacy_class(HatParams::quadruple(0, 3, 19, 0)) == LegacyClass::a);
  CHECK(legacy_class(HatParams::quadruple(1, 3, 19, 0)) == LegacyClass::b);
  CHECK(legacy_class(HatParams::quadruple(0, 1, 1, 0)) == LegacyClass::a);
  CHECK(legacy_class(HatParams::quadruple(0, 19, 3, 0)) == LegacyClass::none);
  CHECK(legacy_class(HatParams::quadruple(3, 3, 19, 0)) == LegacyClass::none);
  CHECK(legacy_class(HatParams::quadruple(6, 9, 15, 6)) == LegacyClass::c);
  CHECK(to_string(LegacyClass::b) == "b");
}

TEST_CASE("hat parameters") {
  const HatParams h = HatParams::hat(-4, 3, 19);
  CHECK(h.n() == 0);
  CHECK(h.triangle() == tri("(0,0);(-4,3);(19,0)"));
  CHECK(orientation(h.triangle()) == Orientation::clockwise);
  CHECK_THROWS_AS(HatParams::hat(1, 0, 19), DomainError);
  CHECK_THROWS_AS(HatParams::hat(1, 3, -1), DomainError);
  CHECK_THROWS_AS(HatParams::quadruple(1, 3, 19, 3), DomainError);
  CHECK(format_hat(HatParams::quadruple(1, 3, 19, 2)) == "T{1,3,19,2}");
  CHECK(parse_hat("T{1, 3, 19}") == HatParams::hat(1, 3, 19));
  CHECK(parse_hat("T{1,3,19,2}") == HatParams::quadruple(1, 3, 19, 2));
  CHECK_THROWS_AS(parse_hat("T{1,3}"), ParseError);
  CHECK_THROWS_AS(parse_hat("T{1/2,3,19}"), ParseError);
  CHECK_THROWS_AS(parse_hat("{1,3,19}"), ParseError);
}

TEST_CASE("encoding triple invariants") {
  CHECK_NOTHROW(EncodingTriple(1, 3, 19));
  CHECK_NOTHROW(EncodingTriple(5, 3, 1));
  CHECK_THROWS_AS(EncodingTriple(7, 3, 19), DomainError);
  CHECK_THROWS_AS(EncodingTriple(2, 3, 19), DomainError);
  CHECK_THROWS_AS(EncodingTriple(1, 4, 19), DomainError);
  CHECK_THROWS_AS(EncodingTriple(1, 3, 18), DomainError);
  CHECK(EncodingTriple(1, 3, 19) < EncodingTriple(3, 3, 19));
  CHECK(format_triple(EncodingTriple(1, 3, 19)) == "(1,3,19)");
}

TEST_CASE("triangle literal") {
  const Triangle t = tri(" (1/2, 0) ; (1/2,3/2);(5/2,0)");
  CHECK(t[1] == pt("1/2", "3/2"));
  CHECK(format_triangle(t) == "(1/2,0);(1/2,3/2);(5/2,0)");
  CHECK(tri("T{1,3,19}") == tri("(0,0);(1,3);(19,0)"));
  CHECK_THROWS_AS(tri("(0,0);(1,3)"), ParseError);
  CHECK_THROWS_AS(tri("(0,0);(1,3);(19,0);(1,1)"), ParseError);
  CHECK_THROWS_AS(tri("(0,0);(1,1/3);(19,0)"), ParseError);
}

TEST_CASE("transform trace") {
  TransformTrace trace;
  trace.push("translate", elementary::translation(pt("-1", "0")));
  trace.push("shear", elementary::shear(2));
  CHECK(trace.steps().size() == 2);
  CHECK(apply(trace.composed(), pt("1", "1")) == pt("2", "1"));
  CHECK(format_trace(trace) == "translate: [[1,0],[0,1]]+(-1,0)\nshear: [[1,0],[2,1]]+(0,0)\n");
}

TEST_CASE("property: area ratio under GA(2, D) is a power of two and the sign follows det") {
  Gen gen(31);
  for (int trial = 0; trial < 500; ++trial) {
    const Triangle t = gen.triangle();
    const AffineMap2 f = gen.ga2();
    const Dyadic before = signed_area2(t), after = signed_area2(apply(f, t));
    const auto ratio = dyadic::testing::to_rational(after) / dyadic::testing::to_rational(before);
    CHECK(dyadic::testing::is_plus_minus_power_of_two(ratio));
    CHECK(((ratio < 0) == (f.linear.det() < Dyadic(0))));
  }
}

TEST_CASE("property: boundary types survive GA(2, D) up to reversal") {
  Gen gen(32);
  for (int trial = 0; trial < 300; ++trial) {
    const Triangle t = gen.triangle();
    const AffineMap2 f = gen.ga2();
    CHECK(equal_up_to_reversal(boundary_type(apply(f, t)), boundary_type(t)));
    CHECK(parse_triangle(format_triangle(t)) == t);
  }
}
