#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fal/falmap.hpp"

namespace fal {

struct SignaturePair {
  int clasp;  // C_i, linking K_f and K_i
  int knot;   // K_i
};

struct SignatureChord {
  int clasp;  // C_ij
  int i, j;   // 1-based pair indices, i < j
};

// Pair i (1-based) is pairs[i - 1]; pairs follow K_f's listed direction
// starting from its first vertex, so alpha_order[i - 1] is the K_f vertex
// where D_i meets K_f.
struct SignatureDecomposition {
  int k_f = -1;
  std::vector<SignaturePair> pairs;
  std::vector<SignatureChord> chords;
  std::vector<int> alpha_order;
  std::vector<int> disk_choice;  // index into crossing_disks(m, C_i); 0 = designated

  int n() const { return static_cast<int>(pairs.size()); }
  // Index i of a knot circle in K, or 0 when it is not in K.
  int index_of_knot(int knot) const;
};

// Checks every clause for the given K_f. With require_chords = false the
// "every K_i carries a chord" clause is skipped; this admits skeleton
// fixtures that are not themselves flat FALs. why (if given) receives the
// first failing clause.
std::optional<SignatureDecomposition> decompose(const FalMap& m, int k_f, bool require_chords = true,
                                                std::string* why = nullptr);

std::vector<SignatureDecomposition> detect_signature(const FalMap& m);
bool is_signature(const FalMap& m);

// True when no two chords interleave in alpha order.
bool chords_noncrossing(const SignatureDecomposition& s);

}  // namespace fal
