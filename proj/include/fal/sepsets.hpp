#pragma once

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "fal/geodesics.hpp"
#include "fal/signature.hpp"

namespace fal {

struct SeparatingPair {
  DiskTrace first, second;
  int shared_longitude = -1;  // crossing circle
};

// Region model of the complement cut along a disk collection. Each disk is
// a curtain over its trace, hanging from the crossing circles where it has
// longitude punctures. A curtain with a crossing circle it alone hangs
// from can be walked around, so it is dropped; this repeats until stable.
// The collection separates iff the remaining traces cut the sphere.
// Returns nullopt when the traces cannot be drawn disjointly.
std::optional<bool> separates(const FalMap& m, const std::vector<DiskTrace>& disks);

// All crossing disk traces of m, designated first for each crossing circle.
std::vector<DiskTrace> all_crossing_disks(const FalMap& m);

// True when all traces can be drawn at once without meeting.
bool disjoint(const FalMap& m, const std::vector<DiskTrace>& disks);

// Pairs of disjoint crossing disks on the same crossing circle.
std::vector<SeparatingPair> separating_pairs(const FalMap& m);

struct SeparatingQuadruple {
  int chord = -1;          // C_ij
  int i = 0, j = 0;        // pair indices, i < j
  DiskTrace d_i, d_j, d_ij, d_long;
};

class MissingLongitudinalDisk : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<SeparatingQuadruple> separating_quadruples(const FalMap& m, const SignatureDecomposition& sig);

// alpha in 1..n names the arc of K_f from D_alpha to D_(alpha mod n + 1).
struct InsideOrder {
  int alpha = 0;
  std::vector<std::array<int, 2>> interval;   // per quadruple, positions after alpha
  std::vector<std::set<ComponentRef>> insides;
  std::vector<std::vector<int>> inside_arcs;  // K_f arcs, by position of their start
  std::vector<std::array<int, 2>> relation;   // (a, b): quadruple a inside quadruple b
  bool less(int a, int b) const;
};

// Position (1..n) of pair index k along K_f after alpha.
int alpha_position(int n, int alpha, int k);

InsideOrder inside_order(const FalMap& m, const SignatureDecomposition& sig,
                         const std::vector<SeparatingQuadruple>& quads, int alpha);

struct StandardBall {
  int alpha = 0;
  std::vector<int> outermost;    // quadruple indices, ordered along K_f from alpha
  std::vector<int> subsequence;  // the initial maximally adjacent run
  std::set<ComponentRef> enclosed;
  std::set<ComponentRef> excluded;
  std::vector<int> sphere_punctures;  // knot circles, K_f first
  std::array<int, 2> certificate{-1, -1};  // K_f edges crossed (tail vertex ids)
  bool certificate_ok = false;
};

StandardBall standard_ball(const FalMap& m, const SignatureDecomposition& sig,
                           const std::vector<SeparatingQuadruple>& quads, const InsideOrder& order);

// Searches for a simple closed curve meeting the link in exactly two points
// of knot circle k, with `inside` on one side and every other component
// except k on the other. Returns the crossed edges.
std::optional<std::array<int, 2>> two_point_curve(const FalMap& m, int k, const std::set<ComponentRef>& inside);

}  // namespace fal
