#pragma once

#include <functional>
#include <vector>

#include "fal/falmap.hpp"

namespace fal {

enum class EdgeKind : std::uint8_t { Knot, Clasp, Tail, Arc };

// Plane graph with darts in pairs (twin = d ^ 1) and a ccw rotation at each
// vertex. Faces follow the FalMap convention: the face left of d continues
// with prev(twin(d)), and the corner (x, next(x)) lies in the face left of x.
class PlaneGraph {
 public:
  int vertex_count() const { return static_cast<int>(first_.size()); }
  int dart_count() const { return static_cast<int>(vert_.size()); }

  static int twin(int d) { return d ^ 1; }
  int vert(int d) const { return vert_[d]; }
  int next(int d) const { return next_[d]; }
  int prev(int d) const { return prev_[d]; }
  int head(int d) const { return vert_[d ^ 1]; }
  EdgeKind kind(int d) const { return kind_[d]; }
  int origin(int d) const { return origin_[d]; }
  int first(int v) const { return first_[v]; }

  int add_vertex();
  // Adds edge u-w. Its dart at u is placed right after after_u in the ccw
  // order (after_u = -1 when u has no darts yet), likewise at w.
  // Returns the dart leaving u.
  int add_edge(int u, int after_u, int w, int after_w, EdgeKind k, int origin);
  // Splits the edge of d at a new vertex m. d keeps its tail and now ends
  // at m; the returned dart leaves m toward the old head on the same side.
  int subdivide(int d);
  // Sets next(d) = n. Callers must leave every rotation a single cycle.
  void link(int d, int n);
  void set_origin(int d, int o) { origin_[d] = o; }

  // A knot dart with the given origin whose left face is face_id, or -1.
  int find_piece(int origin, int face_id, const std::vector<int>& face) const;

  // Face id for every dart.
  std::vector<int> faces(int* count) const;
  // Regions of the sphere after deleting the edges for which cut(d) holds:
  // faces merged across every other edge. Indexed by face id.
  std::vector<int> regions(const std::vector<int>& face, int face_count,
                           const std::function<bool(int)>& cut, int* count) const;

 private:
  std::vector<int> vert_, next_, prev_, origin_, first_;
  std::vector<EdgeKind> kind_;
};

// A FalMap drawn as a plane graph: knot and clasp edges, plus one tail per
// passage from the vertex to the point where the crossing circle pierces
// the projection sphere (on the far side of the strand).
struct FalOverlay {
  PlaneGraph g;
  std::vector<int> dart;  // FalMap dart -> overlay dart (knot and clasp darts)
  std::vector<int> tip;   // FalMap vertex -> puncture vertex
  std::vector<int> tail;  // FalMap vertex -> overlay dart from the tip

  explicit FalOverlay(const FalMap& m);

  // Draws an arc starting in the corner after dart `from` (at its vertex),
  // crossing the edges of `crossings` in order (each given by the FalMap
  // dart whose left face is the face being left; a subdivided edge is
  // crossed on whichever piece borders the current face), ending in the
  // corner after dart `to`. Every segment must stay in one face; returns false if not.
  // The arc edges are tagged with origin `id`; crossing vertices are
  // appended to `cross_vertices` when given.
  bool route(int from, const std::vector<int>& crossings, int to, int id,
             std::vector<int>* cross_vertices = nullptr);
};

}  // namespace fal
