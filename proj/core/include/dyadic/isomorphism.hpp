#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "dyadic/pipeline.hpp"

namespace dyadic {

struct EncodingEntry {
  bool mirrored;  // computed on mirror(t)
  std::size_t vertex;
  Representative rep;
};

/// Representatives of t at each vertex, then of mirror(t) at each vertex.
std::vector<EncodingEntry> encode_all_entries(const Triangle& t);

/// The set of (up to six) encoding triples of t and its mirror image.
std::set<EncodingTriple> encode_all(const Triangle& t);

struct IsoResult {
  bool isomorphic = false;
  std::optional<AffineMap2> witness;
  // Unpointed answers rest on the set-intersection criterion over
  // encode_all rather than on a direct characterisation.
  bool derived = false;
};

/// Pointed oriented isomorphism carrying vertex v1 of t1 to vertex v2 of t2.
/// The witness has positive determinant.
IsoResult pointed_isomorphic(const Triangle& t1, std::size_t v1, const Triangle& t2, std::size_t v2);

/// Isomorphism of the triangles as CB-modes; the witness may reverse
/// orientation.
IsoResult isomorphic(const Triangle& t1, const Triangle& t2);

/// True when the encoded class contains a right hat, i.e. j divides i.
bool right_hat_test(const EncodingTriple& e);

/// f is in GA(2, D) and maps the vertex set of `from` onto that of `to`.
bool is_isomorphism_between(const AffineMap2& f, const Triangle& from, const Triangle& to);

}  // namespace dyadic
