#pragma once

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fal/falmap.hpp"

namespace fal {

class FamilyError : public std::runtime_error {
 public:
  enum class Kind { OddTwist, ValidationFailure, Bounds };
  FamilyError(Kind k, const std::string& what, std::string clasp = {})
      : std::runtime_error(what), kind_(k), clasp_(std::move(clasp)) {}
  Kind kind() const { return kind_; }
  const std::string& clasp() const { return clasp_; }

 private:
  Kind kind_;
  std::string clasp_;
};

struct TwistRegionDiagram {
  FalMap skeleton;
  std::map<std::string, int> twists;  // clasp name -> signed crossing count
};

// Even twists are undone by a homeomorphism of the complement, so the flat
// FAL is the skeleton itself.
FalMap augment_flatten(const TwistRegionDiagram& d);

FalMap borromean();
FalMap chain_p(int n);  // n >= 3
FalMap chain_o(int n);  // n >= 2
FalMap pretzel(int n);  // n >= 2, chords {i, i+1}

using Chord = std::pair<int, int>;  // 1-based indices, first < second

// Signature link on K_f with n circles K_i, each linked to K_f by C_i,
// plus one crossing circle per chord. Knot circles without chords become
// single-passage cycles; such diagrams are built only as degenerate
// skeletons (they are not flat FALs).
FalMap signature_link(int n, const std::vector<Chord>& chords);

FalMap figure14();
FalMap figure15();

// Name of the chord crossing circle C_ij as produced by signature_link.
std::string chord_name(int i, int j);

// Random validate-passing signature link with at most max_knots knot
// circles (K_f included).
FalMap random_signature(std::mt19937_64& rng, int max_knots);

// Random noncrossing chord set on n points in which every point is used.
std::vector<Chord> random_noncrossing_chords(std::mt19937_64& rng, int n);

}  // namespace fal
