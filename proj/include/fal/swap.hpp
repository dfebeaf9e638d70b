#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fal/geodesics.hpp"
#include "fal/signature.hpp"

namespace fal {

enum class RewriteKind : std::uint8_t { Flype, FullSwap, Mirror, Relabel };

const char* to_string(RewriteKind k);

struct RewriteStep {
  RewriteKind kind = RewriteKind::Mirror;
  std::string clasp;    // Flype: crossing circle moved
  int alternate = -1;   // Flype: index into crossing_disks of the input
  std::string k_f;      // FullSwap
  // Components (input names) whose meridian and longitude are exchanged.
  std::vector<std::string> slope_swapped;
  // Input name -> output name for components that are renamed.
  std::map<std::string, std::string> rename;
  std::map<std::string, std::string> vertex_rename;  // Relabel only
};

class NotAnAlternate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Re-seats crossing circle c on the alternate disk: the clasp moves to the
// middle segment of the target trace and the two passages move to where
// the trace crosses the knot circles (keeping their names).
FalMap flype(const FalMap& m, int clasp, const DiskTrace& target);

// Exchanges K_i and C_i for every pair. The result is the pi-rotation of
// the diagram about K_f's axis: every knot cycle reversed, each K_i cycle
// renamed C_i and each C_i clasp renamed K_i.
std::pair<FalMap, RewriteStep> full_swap(const FalMap& m, const SignatureDecomposition& sig);

// Replays one step. Flype steps look the alternate up by index.
FalMap apply(const FalMap& m, const RewriteStep& step);

}  // namespace fal
