#pragma once

#include <cstddef>
#include <vector>

#include "fal/dartmap.hpp"
#include "fal/falmap.hpp"

namespace fal {

// Nonseparable plane maps (loopless, 2-connected) with 2..max_edges edges,
// one per isomorphism class (mirror images identified). Darts 2e and
// 2e + 1 form edge e. Indexed by edge count.
std::vector<std::vector<DartMap>> nonseparable_maps(int max_edges);

// The FAL map obtained from plane map h by turning every edge into a
// crossing circle and joining the knot strands around it by smoothing
// `smoothing` (bit e set: the strands pass along the ends of edge e rather
// than its sides).
DartMap medial_fal(const DartMap& h, unsigned smoothing);

// Number of knot circles medial_fal(h, smoothing) would have.
int medial_knot_count(const DartMap& h, unsigned smoothing);

struct CensusLimits {
  int max_components = 10;
  int max_clasps = 9;
};

struct CensusStats {
  std::size_t plane_maps = 0;   // nonseparable maps visited
  std::size_t candidates = 0;   // FAL maps built
  std::size_t valid = 0;        // validate-passing, before dedup
};

// Every validate-passing flat FAL within the limits, one per canonical
// form, ordered by component count and then canonical form.
std::vector<FalMap> census(const CensusLimits& limits, CensusStats* stats = nullptr);

}  // namespace fal
