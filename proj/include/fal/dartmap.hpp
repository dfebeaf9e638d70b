#pragma once

#include <cstdint>
#include <vector>

namespace fal {

// Combinatorial map on darts 0..n-1. alpha is a fixed-point-free involution
// (edge halves), sigma the counter-clockwise rotation at each vertex.
// label carries per-dart structure that isomorphisms must preserve.
struct DartMap {
  std::vector<int> alpha;
  std::vector<int> sigma;
  std::vector<int> label;

  int size() const { return static_cast<int>(alpha.size()); }
  std::vector<int> sigma_inverse() const;
  // Connected components of the group generated by alpha and sigma.
  std::vector<int> components(int* count) const;
  // Face id per dart, traced by phi(d) = sigma^-1(alpha(d)); the face lies
  // to the left of every dart in its orbit.
  std::vector<int> faces(int* count) const;
  int vertex_count() const;
};

using Code = std::vector<std::int32_t>;

// Canonical traversal of one connected map: the lexicographically least
// BFS code over every root dart and both orientations.
struct CanonicalTraversal {
  Code code;
  int root = -1;
  bool reversed = false;     // true when sigma^-1 realised the minimum
  std::vector<int> order;    // darts in canonical numbering order
};

CanonicalTraversal canonical_traversal(const DartMap& m);

// Invariant of the whole map up to isomorphism and orientation reversal.
// Disconnected maps are encoded as the sorted list of component codes.
Code canonical_code(const DartMap& m);

// Dart bijection a -> b carrying alpha to alpha, labels to labels and sigma
// to sigma or (per component) sigma^-1. Empty when the maps differ.
std::vector<int> map_isomorphism(const DartMap& a, const DartMap& b);

}  // namespace fal
