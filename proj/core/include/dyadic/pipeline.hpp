#pragma once

#include <array>
#include <cstddef>
#include <functional>

#include "dyadic/triangle.hpp"

namespace dyadic {

/// Vertex indices of the input triangle playing the roles A (pointed), B, C,
/// with A, B, C clockwise.
struct PointedRoles {
  std::size_t a, b, c;
};

/// Throws DegenerateError for collinear input, std::out_of_range for vertex > 2.
PointedRoles pointed_roles(const Triangle& t, std::size_t vertex);

/// Position of B = (i, j) relative to C = (m, 0) once C is on the x-axis.
struct ShearWindow {
  Integer i, j, m;
};

/// The dyadic c of least depth in [-i/j, (m - i)/j], smallest on ties.
Dyadic minimal_depth_shear(const ShearWindow& w);

/// Free choices made along the way. Any choice yields the same encoding
/// triple; varying them is how that independence is tested.
struct PipelineChoices {
  /// Selects the Bezout solution (x + t a, y + t b) of the on-axis step.
  Integer bezout_variant = 0;
  /// Shear constant for the B-into-[0, m] step. When empty, the shear is
  /// applied only if i lies outside [0, m], with minimal_depth_shear.
  std::function<Dyadic(const ShearWindow&)> shear;
};

struct NormalizedHat {
  HatParams hat;  // 0 <= i <= m (default choices), j odd, gcd(i, m) odd
  TransformTrace trace;
  PointedRoles roles;
};

/// Maps the triangle pointed at `vertex` onto a hat T_{i,j,m,0}: translate
/// the vertex to the origin, clear denominators, rotate C onto the positive
/// x-axis, shear B over [0, m], then strip common powers of two.
NormalizedHat normalize_pointed(const Triangle& t, std::size_t vertex,
                                const PipelineChoices& choices = {});

struct Representative {
  EncodingTriple triple;
  TransformTrace trace;  // composed map takes A, B, C to (0,0), (i,j), (m,0)
  PointedRoles roles;
};

/// Continues normalize_pointed until i and m are odd, then shears i to its
/// canonical residue in {1, 3, ..., 2j - 1}.
Representative to_representative(const Triangle& t, std::size_t vertex,
                                 const PipelineChoices& choices = {});

EncodingTriple encode(const Triangle& t, std::size_t vertex, const PipelineChoices& choices = {});

/// The odd member of {1, ..., 2j - 1} congruent to i modulo j (j odd, positive).
Integer odd_representative(const Integer& i, const Integer& j);

}  // namespace dyadic
