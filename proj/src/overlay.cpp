#include "fal/overlay.hpp"

#include <numeric>

namespace fal {

int PlaneGraph::add_vertex() {
  first_.push_back(-1);
  return vertex_count() - 1;
}

int PlaneGraph::add_edge(int u, int after_u, int w, int after_w, EdgeKind k, int origin) {
  const int a = dart_count(), b = a + 1;
  vert_.insert(vert_.end(), {u, w});
  next_.insert(next_.end(), {a, b});
  prev_.insert(prev_.end(), {a, b});
  kind_.insert(kind_.end(), {k, k});
  origin_.insert(origin_.end(), {origin, origin});
  auto place = [&](int d, int v, int after) {
    if (after < 0) {
      first_[v] = d;
      return;
    }
    int n = next_[after];
    next_[after] = d;
    prev_[d] = after;
    next_[d] = n;
    prev_[n] = d;
  };
  place(a, u, after_u);
  place(b, w, after_w);
  return a;
}

int PlaneGraph::subdivide(int d) {
  const int t = d ^ 1, b = vert_[t];
  const int m = add_vertex();
  const int e = add_edge(m, -1, b, -1, kind_[d], origin_[d]);
  const int eb = e ^ 1;
  origin_[eb] = origin_[t];
  // eb takes the place of t around b.
  if (next_[t] == t) {
    next_[eb] = prev_[eb] = eb;
  } else {
    next_[eb] = next_[t];
    prev_[eb] = prev_[t];
    prev_[next_[t]] = eb;
    next_[prev_[t]] = eb;
  }
  if (first_[b] == t) first_[b] = eb;
  // t moves to m, opposite e.
  vert_[t] = m;
  next_[t] = prev_[t] = e;
  next_[e] = prev_[e] = t;
  return e;
}

void PlaneGraph::link(int d, int n) {
  next_[d] = n;
  prev_[n] = d;
}

std::vector<int> PlaneGraph::faces(int* count) const {
  std::vector<int> face(dart_count(), -1);
  int f = 0;
  for (int s = 0; s < dart_count(); ++s) {
    if (face[s] >= 0) continue;
    for (int d = s; face[d] < 0; d = prev_[d ^ 1]) face[d] = f;
    ++f;
  }
  if (count) *count = f;
  return face;
}

std::vector<int> PlaneGraph::regions(const std::vector<int>& face, int face_count,
                                     const std::function<bool(int)>& cut, int* count) const {
  std::vector<int> parent(face_count);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int d = 0; d < dart_count(); d += 2)
    if (!cut(d)) parent[find(face[d])] = find(face[d ^ 1]);
  std::vector<int> id(face_count, -1), out(face_count);
  int n = 0;
  for (int f = 0; f < face_count; ++f) {
    int r = find(f);
    if (id[r] < 0) id[r] = n++;
    out[f] = id[r];
  }
  if (count) *count = n;
  return out;
}

FalOverlay::FalOverlay(const FalMap& m) {
  const int n = m.vertex_count();
  for (int v = 0; v < n; ++v) g.add_vertex();
  dart.assign(m.dart_count(), -1);
  // Lay down every edge once, then rewire rotations to follow sigma.
  for (int d = 0; d < m.dart_count(); ++d) {
    if (dart[d] >= 0) continue;
    int a = m.alpha(d);
    EdgeKind k = FalMap::is_clasp_dart(d) ? EdgeKind::Clasp : EdgeKind::Knot;
    int od = g.add_edge(FalMap::vertex_of(d), -1, FalMap::vertex_of(a), -1, k, d);
    g.set_origin(od ^ 1, a);
    dart[d] = od;
    dart[a] = od ^ 1;
  }
  for (int d = 0; d < m.dart_count(); ++d) g.link(dart[d], dart[m.sigma(d)]);

  tip.assign(n, -1);
  tail.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    // The knot-knot corner (x, sigma x).
    int x = m.side(v) == Side::Left ? 3 * v + 1 : 3 * v;
    tip[v] = g.add_vertex();
    int t = g.add_edge(v, dart[x], tip[v], -1, EdgeKind::Tail, v);
    tail[v] = t ^ 1;
  }
}

int PlaneGraph::find_piece(int origin, int face_id, const std::vector<int>& face) const {
  for (int d = 0; d < dart_count(); ++d)
    if (kind_[d] == EdgeKind::Knot && origin_[d] == origin && face[d] == face_id) return d;
  return -1;
}

bool FalOverlay::route(int from, const std::vector<int>& crossings, int to, int id,
                       std::vector<int>* cross_vertices) {
  int cur = from;
  for (int x : crossings) {
    std::vector<int> face = g.faces(nullptr);
    int d = g.find_piece(x, face[cur], face);
    if (d < 0) return false;
    int e = g.subdivide(d);
    int m = g.vert(e);
    g.add_edge(g.vert(cur), cur, m, e, EdgeKind::Arc, id);
    if (cross_vertices) cross_vertices->push_back(m);
    cur = d ^ 1;
  }
  std::vector<int> face = g.faces(nullptr);
  if (face[to] != face[cur]) return false;
  g.add_edge(g.vert(cur), cur, g.vert(to), to, EdgeKind::Arc, id);
  return true;
}

}  // namespace fal
