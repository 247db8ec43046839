#include "dyadic/isomorphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace dyadic {

std::vector<EncodingEntry> encode_all_entries(const Triangle& t) {
  require_nondegenerate(t);
  const Triangle m = mirror(t);
  std::vector<EncodingEntry> out;
  out.reserve(6);
  for (std::size_t v = 0; v < 3; ++v) out.push_back({false, v, to_representative(t, v)});
  for (std::size_t v = 0; v < 3; ++v) out.push_back({true, v, to_representative(m, v)});
  return out;
}

std::set<EncodingTriple> encode_all(const Triangle& t) {
  std::set<EncodingTriple> out;
  for (const auto& e : encode_all_entries(t)) out.insert(e.rep.triple);
  return out;
}

bool is_isomorphism_between(const AffineMap2& f, const Triangle& from, const Triangle& to) {
  if (!is_invertible(f)) return false;
  std::array<Vec2, 3> image{apply(f, from[0]), apply(f, from[1]), apply(f, from[2])};
  std::array<Vec2, 3> target = to.v;
  std::sort(image.begin(), image.end());
  std::sort(target.begin(), target.end());
  return image == target;
}

namespace {

void check_witness(const AffineMap2& w, const Triangle& t1, const Triangle& t2) {
  if (!is_isomorphism_between(w, t1, t2)) {
    throw std::logic_error("isomorphism witness failed verification");
  }
}

}  // namespace

IsoResult pointed_isomorphic(const Triangle& t1, std::size_t v1, const Triangle& t2, std::size_t v2) {
  const Representative r1 = to_representative(t1, v1);
  const Representative r2 = to_representative(t2, v2);
  if (r1.triple != r2.triple) return {};
  AffineMap2 w = compose(r1.trace.composed(), inverse(r2.trace.composed()));
  check_witness(w, t1, t2);
  if (apply(w, t1[v1]) != t2[v2] || w.linear.det().sign() <= 0) {
    throw std::logic_error("pointed witness does not fix the pointed vertex orientation");
  }
  return {true, std::move(w), false};
}

IsoResult isomorphic(const Triangle& t1, const Triangle& t2) {
  const auto entries1 = encode_all_entries(t1);
  require_nondegenerate(t2);
  // An isomorphism either preserves orientation (match t1 with t2 directly)
  // or is a mirror followed by an orientation-preserving one, so t2's own
  // three representatives suffice on the right-hand side.
  for (std::size_t v2 = 0; v2 < 3; ++v2) {
    const Representative r2 = to_representative(t2, v2);
    for (const auto& e1 : entries1) {
      if (e1.rep.triple != r2.triple) continue;
      AffineMap2 w = compose(e1.rep.trace.composed(), inverse(r2.trace.composed()));
      if (e1.mirrored) w = compose(elementary::reflection(elementary::Mirror::x_axis), w);
      check_witness(w, t1, t2);
      return {true, std::move(w), true};
    }
  }
  return {false, std::nullopt, true};
}

bool right_hat_test(const EncodingTriple& e) { return e.i() == e.j(); }

}  // namespace dyadic
