#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "fal/signature.hpp"
#include "fal/swap.hpp"

namespace fal {

struct ReflectionClass {
  enum class Kind : std::uint8_t { ThreeRS_Borromean, TwoRS_P, TwoRS_O, UniqueRS };
  Kind kind = Kind::UniqueRS;
  int n = 0;  // chain length for TwoRS_P / TwoRS_O

  bool multiple() const { return kind != Kind::UniqueRS; }
  std::string to_string() const;  // "TwoRS_P(4)" etc.
  auto operator<=>(const ReflectionClass&) const = default;
};

// Structural match against the three multi-surface patterns; everything
// else is UniqueRS.
ReflectionClass reflection_class(const FalMap& m);

struct Budget {
  int max_depth = 0;  // 0: twice the number of crossing circles
  std::size_t max_forms = 100000;

  // Default budget with max_forms taken from FAL_BUDGET when set.
  static Budget from_env();
};

struct Witness {
  std::string invariant;
  std::string a, b;
};

struct EquivalenceVerdict {
  enum class Kind : std::uint8_t { Equivalent, Distinct, Unknown };
  Kind kind = Kind::Unknown;
  std::string method;  // which stage decided
  // Equivalent: steps taking a to a map with b's canonical form, and the
  // resulting component bijection (a's names -> b's names). Empty when
  // the reflection-class stage decided without finding a path.
  std::vector<RewriteStep> certificate;
  std::map<std::string, std::string> bijection;
  Witness witness;           // Distinct
  std::size_t explored = 0;  // canonical forms visited
  int depth = 0;             // deepest BFS layer reached
  bool exhausted = false;    // the orbit was explored completely
  Budget budget;
};

const char* to_string(EquivalenceVerdict::Kind k);

// Invariants compared before any search. Each is unchanged by relabeling,
// mirror, flype and full swap.
std::vector<Witness> invariant_witnesses(const FalMap& a, const FalMap& b);

EquivalenceVerdict decide_equivalent(const FalMap& a, const FalMap& b, Budget budget = {});

// Applies the certificate to a and checks the canonical form against b.
bool replay(const FalMap& a, const FalMap& b, const std::vector<RewriteStep>& certificate);

// Maps reachable from m by one rewrite: every flype, every full swap, the
// mirror. Each comes with the step producing it.
std::vector<std::pair<FalMap, RewriteStep>> rewrites(const FalMap& m);

struct SymmetryReport {
  enum class Kind : std::uint8_t { Coincide, ExtraFullSwaps };
  Kind kind = Kind::Coincide;
  std::vector<SignatureDecomposition> decompositions;
};

SymmetryReport symmetry_report(const FalMap& m);

}  // namespace fal
