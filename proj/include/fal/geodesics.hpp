#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "fal/falmap.hpp"
#include "fal/overlay.hpp"

namespace fal {

enum class Slope : std::uint8_t { Meridian, Longitude };

struct Puncture {
  ComponentRef comp;
  Slope slope = Slope::Meridian;
  auto operator<=>(const Puncture&) const = default;
};

enum class DiskKind : std::uint8_t { CrossingDisk, LongitudinalDisk, SinglySeparated };

const char* to_string(DiskKind k);
const char* to_string(Slope s);

// A component of the projection sphere minus the knot circles.
struct ReflectionFace {
  struct Boundary {
    int knot;
    bool left;  // the face lies left of the knot's listed direction
  };
  std::vector<Boundary> boundary;
  std::vector<int> punctures;  // FalMap vertices whose crossing-circle puncture lies here
  std::vector<int> faces;      // FalMap faces merged into this one
  int puncture_count() const {
    return static_cast<int>(boundary.size() + punctures.size());
  }
};

std::vector<ReflectionFace> reflection_faces(const FalMap& m);
// Reflection face containing each FalMap face.
std::vector<int> reflection_face_index(const FalMap& m);

// Intersection of a disk with the projection sphere.
//
// Crossing disks: the designated disk runs tip, clasp, tip. An alternate
// runs from the tip beyond clasp.verts[0] across two knot edges (crossed,
// FalMap darts whose left face is the face being left) to the other tip.
// Longitudinal disks: three arcs inside faces joining crossing-circle tips,
// each given by the two FalMap vertices owning the tips.
struct DiskTrace {
  DiskKind kind = DiskKind::CrossingDisk;
  std::array<Puncture, 3> punctures{};
  int clasp = -1;
  bool designated = false;
  std::vector<int> crossed;
  std::vector<std::array<int, 2>> arcs;
  std::vector<int> faces;  // FalMap faces the routed part passes through

  bool same_trace(const DiskTrace& o) const {
    return kind == o.kind && clasp == o.clasp && designated == o.designated &&
           crossed == o.crossed && arcs == o.arcs;
  }
};

// Draws t into o. Returns false when the trace cannot be drawn disjointly
// from what is already there. On success `edges` (if given) receives the
// overlay darts (one per edge) forming the trace.
bool draw_trace(FalOverlay& o, const FalMap& m, const DiskTrace& t, int id,
                std::vector<int>* edges = nullptr);

std::vector<DiskTrace> crossing_disks(const FalMap& m, int clasp);
std::vector<DiskTrace> longitudinal_disks(const FalMap& m);

class IllegalPunctureSet : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

DiskKind classify_disk(const std::array<Puncture, 3>& punctures);

}  // namespace fal
