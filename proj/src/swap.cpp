#include "fal/swap.hpp"

#include <algorithm>

namespace fal {

const char* to_string(RewriteKind k) {
  switch (k) {
    case RewriteKind::Flype: return "Flype";
    case RewriteKind::FullSwap: return "FullSwap";
    case RewriteKind::Mirror: return "Mirror";
    default: return "Relabel";
  }
}

namespace {

// Side bit of the new passage at crossing vertex mv, whose clasp runs along
// the arc segment to `other`.
Side side_at(const PlaneGraph& g, int mv, int other) {
  int next = -1, prev = -1, clasp = -1;
  const int d0 = g.first(mv);
  int d = d0;
  do {
    if (g.kind(d) == EdgeKind::Knot) {
      (g.origin(d) % 3 == 0 ? next : prev) = d;
    } else if (g.kind(d) == EdgeKind::Arc && g.head(d) == other) {
      clasp = d;
    }
    d = g.next(d);
  } while (d != d0);
  if (next < 0 || prev < 0 || clasp < 0) throw std::logic_error("malformed crossing vertex");
  for (d = g.next(next);; d = g.next(d)) {
    if (d == clasp) return Side::Left;
    if (d == prev) return Side::Right;
  }
}

}  // namespace

FalMap flype(const FalMap& m, int clasp, const DiskTrace& target) {
  if (clasp < 0 || clasp >= m.clasp_count()) throw NotAnAlternate("no such crossing circle");
  const auto alts = crossing_disks(m, clasp);
  bool found = false;
  for (std::size_t i = 1; i < alts.size(); ++i) found = found || alts[i].same_trace(target);
  if (!found) throw NotAnAlternate("trace is not an alternate crossing disk of " + m.clasps()[clasp].name);

  // The crossing circle lies on the sphere formed by the designated disk
  // and the target; sliding it across that sphere to encircle the other
  // pair of punctures is an isotopy, so nothing else in the diagram moves.
  const int u = m.clasps()[clasp].verts[0], w = m.clasps()[clasp].verts[1];
  FalOverlay o(m);
  std::vector<int> cross;
  if (!o.route(o.tail[u], target.crossed, o.tail[w], 1, &cross) || cross.size() != 2)
    throw std::logic_error("alternate trace could not be drawn");
  const int e1 = m.knot_edge(target.crossed[0]), e2 = m.knot_edge(target.crossed[1]);

  // Passages keep their vertex names; the one on u's knot circle is u.
  int x1 = u, x2 = w;
  if (m.knot_of(u) != m.knot_of(w) && m.knot_of(e1) != m.knot_of(u)) std::swap(x1, x2);

  FalSpec s = m.spec();
  for (KnotCycle& k : s.knots) {
    std::vector<int> verts;
    for (int v : k.verts) {
      if (v != u && v != w) verts.push_back(v);
      if (v == e1) verts.push_back(x1);
      if (v == e2) verts.push_back(x2);
    }
    k.verts = std::move(verts);
  }
  s.sides[x1] = side_at(o.g, cross[0], cross[1]);
  s.sides[x2] = side_at(o.g, cross[1], cross[0]);
  return FalMap::build(std::move(s), m.degenerate());
}

std::pair<FalMap, RewriteStep> full_swap(const FalMap& m, const SignatureDecomposition& sig) {
  RewriteStep step;
  step.kind = RewriteKind::FullSwap;
  step.k_f = m.knots()[sig.k_f].name;
  FalSpec s = m.spec();
  // Rotating by pi about K_f's axis reverses every cycle's direction while
  // the ccw order at each passage stays put.
  for (KnotCycle& k : s.knots) std::reverse(k.verts.begin(), k.verts.end());
  for (const SignaturePair& p : sig.pairs) {
    const std::string kn = m.knots()[p.knot].name, cn = m.clasps()[p.clasp].name;
    s.knots[p.knot].name = cn;
    s.clasps[p.clasp].name = kn;
    step.rename[kn] = cn;
    step.rename[cn] = kn;
    step.slope_swapped.push_back(kn);
    step.slope_swapped.push_back(cn);
  }
  std::sort(step.slope_swapped.begin(), step.slope_swapped.end(), natural_less);
  return {FalMap::build(std::move(s), m.degenerate()), step};
}

FalMap apply(const FalMap& m, const RewriteStep& step) {
  switch (step.kind) {
    case RewriteKind::Flype: {
      int c = m.find_clasp(step.clasp);
      if (c < 0) throw NotAnAlternate("no crossing circle named " + step.clasp);
      auto alts = crossing_disks(m, c);
      if (step.alternate < 1 || step.alternate >= static_cast<int>(alts.size()))
        throw NotAnAlternate("alternate index out of range");
      return flype(m, c, alts[step.alternate]);
    }
    case RewriteKind::FullSwap: {
      int k = m.find_knot(step.k_f);
      auto sig = k < 0 ? std::nullopt : decompose(m, k, false);
      if (!sig) throw std::invalid_argument("no signature decomposition on " + step.k_f);
      return full_swap(m, *sig).first;
    }
    case RewriteKind::Mirror: return mirror(m);
    default: return relabel(m, step.vertex_rename, step.rename);
  }
}

}  // namespace fal
