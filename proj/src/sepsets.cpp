#include "fal/sepsets.hpp"

#include <algorithm>
#include <map>

namespace fal {

namespace {

std::vector<int> hangs_from(const DiskTrace& t) {
  std::vector<int> out;
  for (const Puncture& p : t.punctures)
    if (p.slope == Slope::Longitude && p.comp.kind == ComponentKind::CrossingCircle) out.push_back(p.comp.index);
  return out;
}

ComponentRef knot(int k) { return {ComponentKind::KnotCircle, k}; }
ComponentRef circle(int c) { return {ComponentKind::CrossingCircle, c}; }

}  // namespace

std::optional<bool> separates(const FalMap& m, const std::vector<DiskTrace>& disks) {
  FalOverlay o(m);
  std::vector<std::vector<int>> edges(disks.size());
  for (std::size_t i = 0; i < disks.size(); ++i)
    if (!draw_trace(o, m, disks[i], 100 + static_cast<int>(i), &edges[i])) return std::nullopt;

  std::vector<char> alive(disks.size(), 1);
  for (bool changed = true; changed;) {
    changed = false;
    std::map<int, int> sheets;
    for (std::size_t i = 0; i < disks.size(); ++i)
      if (alive[i])
        for (int c : hangs_from(disks[i])) ++sheets[c];
    for (std::size_t i = 0; i < disks.size(); ++i) {
      if (!alive[i]) continue;
      for (int c : hangs_from(disks[i]))
        if (sheets[c] == 1) {
          alive[i] = 0;
          changed = true;
          break;
        }
    }
  }
  std::set<int> cut;
  for (std::size_t i = 0; i < disks.size(); ++i)
    if (alive[i]) cut.insert(edges[i].begin(), edges[i].end());
  int fc = 0, rc = 0;
  std::vector<int> face = o.g.faces(&fc);
  o.g.regions(face, fc, [&](int d) { return cut.count(d & ~1) > 0; }, &rc);
  return rc >= 2;
}

std::vector<DiskTrace> all_crossing_disks(const FalMap& m) {
  std::vector<DiskTrace> out;
  for (int c = 0; c < m.clasp_count(); ++c) {
    auto d = crossing_disks(m, c);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

bool disjoint(const FalMap& m, const std::vector<DiskTrace>& disks) {
  FalOverlay o(m);
  for (std::size_t i = 0; i < disks.size(); ++i)
    if (!draw_trace(o, m, disks[i], 100 + static_cast<int>(i))) return false;
  return true;
}

std::vector<SeparatingPair> separating_pairs(const FalMap& m) {
  // Separating pairs share their longitudinal slope, which for crossing
  // disks means they hang from the same crossing circle.
  std::vector<SeparatingPair> out;
  for (int c = 0; c < m.clasp_count(); ++c) {
    auto d = crossing_disks(m, c);
    for (std::size_t a = 0; a < d.size(); ++a)
      for (std::size_t b = a + 1; b < d.size(); ++b)
        if (disjoint(m, {d[a], d[b]})) out.push_back({d[a], d[b], c});
  }
  return out;
}

std::vector<SeparatingQuadruple> separating_quadruples(const FalMap& m, const SignatureDecomposition& sig) {
  std::vector<DiskTrace> longs = longitudinal_disks(m);
  std::vector<SeparatingQuadruple> out;
  for (const SignatureChord& ch : sig.chords) {
    SeparatingQuadruple q;
    q.chord = ch.clasp;
    q.i = ch.i;
    q.j = ch.j;
    int ci = sig.pairs[ch.i - 1].clasp, cj = sig.pairs[ch.j - 1].clasp;
    q.d_i = crossing_disks(m, ci).at(sig.disk_choice[ch.i - 1]);
    q.d_j = crossing_disks(m, cj).at(sig.disk_choice[ch.j - 1]);
    q.d_ij = crossing_disks(m, ch.clasp).front();
    std::set<ComponentRef> want{circle(ci), circle(cj), circle(ch.clasp)};
    bool found = false;
    for (const DiskTrace& t : longs) {
      std::set<ComponentRef> got;
      for (const Puncture& p : t.punctures) got.insert(p.comp);
      if (got == want) {
        q.d_long = t;
        found = true;
        break;
      }
    }
    if (!found)
      throw MissingLongitudinalDisk("no longitudinal disk through " + m.clasps()[ci].name + ", " +
                                    m.clasps()[cj].name + ", " + m.clasps()[ch.clasp].name);
    out.push_back(q);
  }
  return out;
}

int alpha_position(int n, int alpha, int k) { return ((k - alpha - 1) % n + n) % n + 1; }

bool InsideOrder::less(int a, int b) const {
  return std::find(relation.begin(), relation.end(), std::array<int, 2>{a, b}) != relation.end();
}

InsideOrder inside_order(const FalMap&, const SignatureDecomposition& sig,
                         const std::vector<SeparatingQuadruple>& quads, int alpha) {
  const int n = sig.n();
  InsideOrder r;
  r.alpha = alpha;
  auto pos = [&](int k) { return alpha_position(n, alpha, k); };
  for (const SeparatingQuadruple& q : quads) {
    int lo = std::min(pos(q.i), pos(q.j)), hi = std::max(pos(q.i), pos(q.j));
    r.interval.push_back({lo, hi});
    std::set<ComponentRef> in;
    for (int k = 1; k <= n; ++k)
      if (lo < pos(k) && pos(k) < hi) {
        in.insert(knot(sig.pairs[k - 1].knot));
        in.insert(circle(sig.pairs[k - 1].clasp));
      }
    for (const SignatureChord& ch : sig.chords) {
      if (ch.clasp == q.chord) continue;
      int a = pos(ch.i), b = pos(ch.j);
      if (lo <= std::min(a, b) && std::max(a, b) <= hi) in.insert(circle(ch.clasp));
    }
    // The K_f arcs strictly between D_i and D_j belong to the inside too,
    // so quadruples enclosing no component still nest correctly.
    std::vector<int> arcs;
    for (int p = lo; p < hi; ++p) arcs.push_back(p);
    r.insides.push_back(std::move(in));
    r.inside_arcs.push_back(std::move(arcs));
  }
  auto subset = [&](int a, int b) {
    const auto& aa = r.inside_arcs[a];
    const auto& ab = r.inside_arcs[b];
    return std::includes(r.insides[b].begin(), r.insides[b].end(), r.insides[a].begin(), r.insides[a].end()) &&
           std::includes(ab.begin(), ab.end(), aa.begin(), aa.end());
  };
  for (std::size_t a = 0; a < quads.size(); ++a)
    for (std::size_t b = 0; b < quads.size(); ++b) {
      if (a == b) continue;
      bool proper = subset(a, b) && !subset(b, a);
      if (proper) r.relation.push_back({static_cast<int>(a), static_cast<int>(b)});
    }
  return r;
}

StandardBall standard_ball(const FalMap& m, const SignatureDecomposition& sig,
                           const std::vector<SeparatingQuadruple>& quads, const InsideOrder& order) {
  const int n = sig.n();
  StandardBall b;
  b.alpha = order.alpha;
  for (std::size_t q = 0; q < quads.size(); ++q) {
    bool top = true;
    for (std::size_t o = 0; o < quads.size(); ++o)
      if (o != q && order.less(static_cast<int>(q), static_cast<int>(o))) top = false;
    if (top) b.outermost.push_back(static_cast<int>(q));
  }
  std::sort(b.outermost.begin(), b.outermost.end(),
            [&](int x, int y) { return order.interval[x][0] < order.interval[y][0]; });
  for (std::size_t i = 1; i < b.outermost.size(); ++i)
    if (order.interval[b.outermost[i]][0] == order.interval[b.outermost[i - 1]][0])
      throw std::logic_error("outermost quadruples start at the same disk");
  if (b.outermost.empty()) return b;

  b.subsequence.push_back(b.outermost[0]);
  for (std::size_t i = 1; i < b.outermost.size(); ++i) {
    if (order.interval[b.outermost[i]][0] != order.interval[b.subsequence.back()][1]) break;
    b.subsequence.push_back(b.outermost[i]);
  }

  std::vector<int> at_pos(n + 1);
  for (int k = 1; k <= n; ++k) at_pos[alpha_position(n, order.alpha, k)] = k;
  b.sphere_punctures.push_back(sig.k_f);
  b.sphere_punctures.push_back(sig.pairs[at_pos[order.interval[b.subsequence[0]][0]] - 1].knot);
  for (int q : b.subsequence) {
    b.sphere_punctures.push_back(sig.pairs[at_pos[order.interval[q][1]] - 1].knot);
    b.enclosed.insert(order.insides[q].begin(), order.insides[q].end());
    for (int e = 0; e < 2; ++e) {
      const SignaturePair& p = sig.pairs[at_pos[order.interval[q][e]] - 1];
      b.enclosed.insert(knot(p.knot));
      b.enclosed.insert(circle(p.clasp));
    }
    b.enclosed.insert(circle(quads[q].chord));
  }
  for (int k = 0; k < m.knot_count(); ++k)
    if (k != sig.k_f && !b.enclosed.count(knot(k))) b.excluded.insert(knot(k));
  for (int c = 0; c < m.clasp_count(); ++c)
    if (!b.enclosed.count(circle(c))) b.excluded.insert(circle(c));

  if (auto cert = two_point_curve(m, sig.k_f, b.enclosed)) {
    b.certificate = *cert;
    b.certificate_ok = true;
  }
  return b;
}

std::optional<std::array<int, 2>> two_point_curve(const FalMap& m, int k, const std::set<ComponentRef>& inside) {
  const FalOverlay base(m);
  std::vector<int> darts;
  for (int v : m.knots()[k].verts) darts.insert(darts.end(), {3 * v, 3 * v + 1});
  for (int x1 : darts) {
    const int f1 = m.face_of(x1), f2 = m.face_of(m.alpha(x1));
    for (int x2 : darts) {
      if (m.face_of(x2) != f2 || m.face_of(m.alpha(x2)) != f1) continue;
      FalOverlay o1 = base;
      int X1 = o1.dart[x1];
      int e1 = o1.g.subdivide(X1), m1 = o1.g.vert(e1);
      std::vector<int> face = o1.g.faces(nullptr);
      // Every piece of x2's edge facing F2 is a candidate crossing.
      std::vector<int> pieces;
      for (int d = 0; d < o1.g.dart_count(); ++d)
        if (o1.g.kind(d) == EdgeKind::Knot && o1.g.origin(d) == x2 && face[d] == face[X1 ^ 1]) pieces.push_back(d);
      for (int X2 : pieces) {
        FalOverlay o = o1;
        int e2 = o.g.subdivide(X2), m2 = o.g.vert(e2);
        o.g.add_edge(m1, X1 ^ 1, m2, e2, EdgeKind::Arc, -2);
        std::vector<int> fc = o.g.faces(nullptr);
        if (fc[X2 ^ 1] != fc[e1]) continue;
        o.g.add_edge(m2, X2 ^ 1, m1, e1, EdgeKind::Arc, -2);
        int nf = 0, nr = 0;
        face = o.g.faces(&nf);
        std::vector<int> reg = o.g.regions(face, nf, [&](int d) { return o.g.kind(d) == EdgeKind::Arc; }, &nr);
        if (nr != 2) continue;
        auto region_of = [&](ComponentRef c) {
          int v = c.kind == ComponentKind::KnotCircle ? m.knots()[c.index].verts[0] : m.clasps()[c.index].verts[0];
          return reg[face[o.dart[c.kind == ComponentKind::KnotCircle ? 3 * v : 3 * v + 2]]];
        };
        for (int in_side = 0; in_side < 2; ++in_side) {
          bool ok = true;
          for (int kk = 0; kk < m.knot_count() && ok; ++kk)
            if (kk != k) ok = (region_of(knot(kk)) == in_side) == (inside.count(knot(kk)) > 0);
          for (int c = 0; c < m.clasp_count() && ok; ++c)
            ok = (region_of(circle(c)) == in_side) == (inside.count(circle(c)) > 0);
          if (ok) return std::array<int, 2>{m.knot_edge(x1), m.knot_edge(x2)};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace fal
