#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fal/dartmap.hpp"

namespace fal {

enum class Side : std::uint8_t { Left, Right };

inline Side flipped(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
inline char side_char(Side s) { return s == Side::Left ? 'L' : 'R'; }

enum class ComponentKind : std::uint8_t { KnotCircle, CrossingCircle };

struct ComponentRef {
  ComponentKind kind = ComponentKind::KnotCircle;
  int index = -1;
  auto operator<=>(const ComponentRef&) const = default;
};

class FalError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Structure, Genus };
  FalError(Kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct KnotCycle {
  std::string name;
  std::vector<int> verts;  // cyclic, in traversal order
};

struct Clasp {
  std::string name;
  std::array<int, 2> verts;
};

// Raw description accepted by FalMap::build. Indices refer to vertex_names.
struct FalSpec {
  std::vector<std::string> vertex_names;
  std::vector<KnotCycle> knots;
  std::vector<Clasp> clasps;
  std::vector<Side> sides;
};

// A flat FAL diagram as a cubic planar map.
//
// Darts: 3v+0 leaves v toward its successor on the knot cycle, 3v+1 toward
// its predecessor, 3v+2 along the clasp. sigma is counter-clockwise; Left
// means the ccw order at v is (next, clasp, prev).
class FalMap {
 public:
  FalMap() = default;

  // Checks structure and planarity (each connected piece has Euler
  // characteristic 2) and normalises ordering: knots and clasps sorted by
  // name, each knot cycle rotated to start at its least vertex name.
  // Single-passage knot cycles are only accepted when allow_degenerate.
  static FalMap build(FalSpec spec, bool allow_degenerate = false);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int knot_count() const { return static_cast<int>(knots_.size()); }
  int clasp_count() const { return static_cast<int>(clasps_.size()); }
  int component_count() const { return knot_count() + clasp_count(); }
  int dart_count() const { return 3 * vertex_count(); }

  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::vector<KnotCycle>& knots() const { return knots_; }
  const std::vector<Clasp>& clasps() const { return clasps_; }
  const std::vector<Side>& sides() const { return sides_; }
  Side side(int v) const { return sides_[v]; }

  int knot_of(int v) const { return knot_of_[v]; }
  int clasp_of(int v) const { return clasp_of_[v]; }
  int succ(int v) const;
  int pred(int v) const;
  int partner(int v) const;
  bool is_self_clasp(int c) const {
    return knot_of_[clasps_[c].verts[0]] == knot_of_[clasps_[c].verts[1]];
  }
  bool degenerate() const { return degenerate_; }

  static int vertex_of(int d) { return d / 3; }
  static bool is_clasp_dart(int d) { return d % 3 == 2; }
  int alpha(int d) const;
  int sigma(int d) const;
  int sigma_inv(int d) const;
  // Face to the left of dart d; the corner (d, sigma d) belongs to it.
  int face_of(int d) const { return face_[d]; }
  int face_count() const { return face_count_; }
  // Darts of each face in traversal order.
  const std::vector<std::vector<int>>& face_darts() const { return face_darts_; }
  // Knot-edge id of a non-clasp dart: the id of the edge leaving its
  // tail vertex toward the successor (edge ids equal the tail vertex of
  // the forward dart).
  int knot_edge(int d) const;

  DartMap dart_map() const;

  int find_vertex(const std::string& name) const;
  int find_knot(const std::string& name) const;
  int find_clasp(const std::string& name) const;
  std::string component_name(ComponentRef r) const;
  ComponentRef find_component(const std::string& name) const;

  FalSpec spec() const;

  bool operator==(const FalMap& o) const;

 private:
  void finalize();

  std::vector<std::string> names_;
  std::vector<KnotCycle> knots_;
  std::vector<Clasp> clasps_;
  std::vector<Side> sides_;
  std::vector<int> knot_of_, pos_, clasp_of_;
  std::vector<int> face_;
  std::vector<std::vector<int>> face_darts_;
  int face_count_ = 0;
  bool degenerate_ = false;
};

// Name-based construction used by generators and tests.
class FalBuilder {
 public:
  FalBuilder& knot(const std::string& name, const std::vector<std::string>& verts);
  FalBuilder& clasp(const std::string& name, const std::string& a, Side sa, const std::string& b,
                    Side sb);
  FalMap build(bool allow_degenerate = false) const;

 private:
  int vertex(const std::string& name);
  FalSpec spec_;
  std::map<std::string, int> index_;
  std::map<std::string, Side> side_;
};

// Rebuilds a FalMap from a cubic map whose darts are labelled 0 (knot) or
// 1 (clasp). Names are generated: v0.., K1.., C1...
FalMap from_dart_map(const DartMap& dm);

// Accepts single-passage knot cycles; validate() rejects them under (c).
FalMap parse(const std::string& text);
std::string serialize(const FalMap& m);

struct ValidationReport {
  bool connected = false;      // (a)
  bool two_clasps = false;     // (b)
  bool knots_linked = false;   // (c)
  bool twist_reduced = false;  // (d)
  bool prime = false;          // (e)
  std::vector<std::string> messages;
  bool ok() const { return connected && two_clasps && knots_linked && twist_reduced && prime; }
};

ValidationReport validate(const FalMap& m);

// Prime-check witness: pairs of distinct knot edges separating the same
// two distinct faces.
std::vector<std::array<int, 2>> two_bonds(const FalMap& m);

Code canonical_form(const FalMap& m);
FalMap mirror(const FalMap& m);

// Renames vertices and components. Missing entries keep their old names.
FalMap relabel(const FalMap& m, const std::map<std::string, std::string>& vertex_names,
               const std::map<std::string, std::string>& component_names);

// Canonical code of the knot-vs-crossing incidence multigraph.
Code incidence_multigraph(const FalMap& m);

// Dart bijection a -> b realising an embedded-map isomorphism (possibly
// orientation reversing), or empty when none exists.
std::vector<int> map_isomorphism(const FalMap& a, const FalMap& b);

// Natural ordering on names: digit runs compare numerically.
bool natural_less(const std::string& a, const std::string& b);

}  // namespace fal
