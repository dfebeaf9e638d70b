#include "fal/geodesics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace fal {

const char* to_string(DiskKind k) {
  switch (k) {
    case DiskKind::CrossingDisk: return "CrossingDisk";
    case DiskKind::LongitudinalDisk: return "LongitudinalDisk";
    default: return "SinglySeparated";
  }
}

const char* to_string(Slope s) { return s == Slope::Meridian ? "Meridian" : "Longitude"; }

namespace {

// Knot-knot corner dart of v; the crossing circle pierces the sphere there.
int knot_corner(const FalMap& m, int v) { return m.side(v) == Side::Left ? 3 * v + 1 : 3 * v; }

int find(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

ComponentRef knot_ref(const FalMap& m, int v) { return {ComponentKind::KnotCircle, m.knot_of(v)}; }
ComponentRef clasp_ref(int c) { return {ComponentKind::CrossingCircle, c}; }

}  // namespace

std::vector<int> reflection_face_index(const FalMap& m) {
  std::vector<int> p(m.face_count());
  std::iota(p.begin(), p.end(), 0);
  for (int v = 0; v < m.vertex_count(); ++v)
    p[find(p, m.face_of(3 * v + 2))] = find(p, m.face_of(m.alpha(3 * v + 2)));
  std::vector<int> id(m.face_count(), -1), out(m.face_count());
  int n = 0;
  for (int f = 0; f < m.face_count(); ++f) {
    int r = find(p, f);
    if (id[r] < 0) id[r] = n++;
    out[f] = id[r];
  }
  return out;
}

std::vector<ReflectionFace> reflection_faces(const FalMap& m) {
  std::vector<int> idx = reflection_face_index(m);
  int n = idx.empty() ? 0 : *std::max_element(idx.begin(), idx.end()) + 1;
  std::vector<ReflectionFace> out(n);
  for (int f = 0; f < m.face_count(); ++f) out[idx[f]].faces.push_back(f);
  for (int v = 0; v < m.vertex_count(); ++v) out[idx[m.face_of(knot_corner(m, v))]].punctures.push_back(v);
  // A knot circle bounds a single face on each side.
  for (int k = 0; k < m.knot_count(); ++k) {
    int v = m.knots()[k].verts[0];
    int left = idx[m.face_of(3 * v)], right = idx[m.face_of(m.alpha(3 * v))];
    out[left].boundary.push_back({k, true});
    out[right].boundary.push_back({k, false});
  }
  return out;
}

bool draw_trace(FalOverlay& o, const FalMap& m, const DiskTrace& t, int id, std::vector<int>* edges) {
  const int before = o.g.dart_count();
  auto collect = [&] {
    if (!edges) return;
    for (int d = before; d < o.g.dart_count(); d += 2)
      if (o.g.kind(d) == EdgeKind::Arc && o.g.origin(d) == id) edges->push_back(d);
  };
  if (t.kind == DiskKind::CrossingDisk) {
    const Clasp& c = m.clasps()[t.clasp];
    int u = c.verts[0], w = c.verts[1];
    if (t.designated) {
      if (edges) {
        edges->push_back(o.dart[3 * u + 2] & ~1);
        edges->push_back(o.tail[u] & ~1);
        edges->push_back(o.tail[w] & ~1);
      }
      return true;
    }
    if (!o.route(o.tail[u], t.crossed, o.tail[w], id)) return false;
    collect();
    return true;
  }
  for (const auto& a : t.arcs)
    if (!o.route(o.tail[a[0]], {}, o.tail[a[1]], id)) return false;
  collect();
  return true;
}

std::vector<DiskTrace> crossing_disks(const FalMap& m, int clasp) {
  const Clasp& c = m.clasps()[clasp];
  const int u = c.verts[0], w = c.verts[1];
  DiskTrace base;
  base.kind = DiskKind::CrossingDisk;
  base.clasp = clasp;
  base.punctures = {Puncture{clasp_ref(clasp), Slope::Longitude},
                    Puncture{knot_ref(m, u), Slope::Meridian},
                    Puncture{knot_ref(m, w), Slope::Meridian}};
  std::vector<DiskTrace> out;
  DiskTrace designated = base;
  designated.designated = true;
  designated.faces = {m.face_of(3 * u + 2), m.face_of(m.alpha(3 * u + 2))};
  out.push_back(designated);

  const FalOverlay o(m);
  std::multiset<int> want{m.knot_of(u), m.knot_of(w)};
  const int start = m.face_of(knot_corner(m, u));
  const int finish = m.face_of(knot_corner(m, w));
  for (int x = 0; x < m.dart_count(); ++x) {
    if (FalMap::is_clasp_dart(x) || m.face_of(x) != start) continue;
    const int mid = m.face_of(m.alpha(x));
    for (int y = 0; y < m.dart_count(); ++y) {
      if (FalMap::is_clasp_dart(y) || m.face_of(y) != mid) continue;
      if (m.knot_edge(x) == m.knot_edge(y)) continue;
      if (m.face_of(m.alpha(y)) != finish) continue;
      if (std::multiset<int>{m.knot_of(x / 3), m.knot_of(y / 3)} != want) continue;
      DiskTrace t = base;
      t.crossed = {x, y};
      t.faces = {start, mid, m.face_of(m.alpha(y))};
      FalOverlay g = o;
      std::vector<int> edges;
      if (!draw_trace(g, m, t, 1, &edges)) continue;
      draw_trace(g, m, designated, 0, &edges);
      // The sphere formed with the designated disk must have another
      // crossing circle on each side.
      std::set<int> cut(edges.begin(), edges.end());
      int fc = 0, rc = 0;
      std::vector<int> face = g.g.faces(&fc);
      std::vector<int> reg = g.g.regions(face, fc, [&](int d) { return cut.count(d & ~1) > 0; }, &rc);
      if (rc != 2) continue;
      std::array<bool, 2> side{false, false};
      for (int v = 0; v < m.vertex_count(); ++v)
        if (m.clasp_of(v) != clasp) side[reg[face[o.dart[3 * v + 2]]]] = true;
      if (!side[0] || !side[1]) continue;
      out.push_back(t);
    }
  }
  return out;
}

std::vector<DiskTrace> longitudinal_disks(const FalMap& m) {
  std::vector<DiskTrace> out;
  const int nc = m.clasp_count();
  if (nc < 3) return out;
  const FalOverlay o(m);
  auto tip_face = [&](int v) { return m.face_of(knot_corner(m, v)); };
  for (int a = 0; a < nc; ++a)
    for (int b = a + 1; b < nc; ++b)
      for (int c = b + 1; c < nc; ++c) {
        const int cl[3] = {a, b, c};
        // Tips 2i, 2i+1 belong to clasp cl[i]. Arcs join one tip of each
        // pair of clasps; fixing clasp a's tips, the 8 single-cycle
        // pairings are (a_s - b_t, b_t' - c_r, c_r' - a_s').
        for (int mask = 0; mask < 8; ++mask) {
          int sa = mask & 1, tb = (mask >> 1) & 1, rc = (mask >> 2) & 1;
          auto tipv = [&](int i, int e) { return m.clasps()[cl[i]].verts[e]; };
          std::vector<std::array<int, 2>> arcs = {{tipv(0, sa), tipv(1, tb)},
                                                  {tipv(1, 1 - tb), tipv(2, rc)},
                                                  {tipv(2, 1 - rc), tipv(0, 1 - sa)}};
          bool ok = true;
          for (const auto& arc : arcs) ok = ok && tip_face(arc[0]) == tip_face(arc[1]);
          if (!ok) continue;
          DiskTrace t;
          t.kind = DiskKind::LongitudinalDisk;
          t.punctures = {Puncture{clasp_ref(a), Slope::Longitude},
                         Puncture{clasp_ref(b), Slope::Longitude},
                         Puncture{clasp_ref(c), Slope::Longitude}};
          t.arcs = arcs;
          for (const auto& arc : arcs) t.faces.push_back(tip_face(arc[0]));
          FalOverlay g = o;
          if (!draw_trace(g, m, t, 1)) continue;
          out.push_back(t);
        }
      }
  return out;
}

DiskKind classify_disk(const std::array<Puncture, 3>& p) {
  std::vector<int> longs, mers;
  for (int i = 0; i < 3; ++i) (p[i].slope == Slope::Longitude ? longs : mers).push_back(i);
  auto is_cc = [&](int i) { return p[i].comp.kind == ComponentKind::CrossingCircle; };
  auto is_kc = [&](int i) { return p[i].comp.kind == ComponentKind::KnotCircle; };
  if (longs.size() == 3) {
    if (!is_cc(0) || !is_cc(1) || !is_cc(2))
      throw IllegalPunctureSet("longitudinal punctures must lie on crossing circles");
    if (p[0].comp == p[1].comp || p[1].comp == p[2].comp || p[0].comp == p[2].comp)
      throw IllegalPunctureSet("two longitudes on the same crossing circle");
    return DiskKind::LongitudinalDisk;
  }
  if (longs.size() == 1 && is_cc(longs[0])) {
    int x = mers[0], y = mers[1];
    if (is_kc(x) && is_kc(y)) return DiskKind::CrossingDisk;
    if (is_cc(x) && is_cc(y) && p[x].comp == p[y].comp && p[x].comp != p[longs[0]].comp)
      return DiskKind::SinglySeparated;
  }
  throw IllegalPunctureSet("no disk type has this puncture pattern");
}

}  // namespace fal
