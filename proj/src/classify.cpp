#include "fal/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>

#include "fal/geodesics.hpp"

namespace fal {

std::string ReflectionClass::to_string() const {
  switch (kind) {
    case Kind::ThreeRS_Borromean: return "ThreeRS_Borromean";
    case Kind::TwoRS_P: return "TwoRS_P(" + std::to_string(n) + ")";
    case Kind::TwoRS_O: return "TwoRS_O(" + std::to_string(n) + ")";
    default: return "UniqueRS";
  }
}

const char* to_string(EquivalenceVerdict::Kind k) {
  switch (k) {
    case EquivalenceVerdict::Kind::Equivalent: return "Equivalent";
    case EquivalenceVerdict::Kind::Distinct: return "Distinct";
    default: return "Unknown";
  }
}

namespace {

int position(const FalMap& m, int v) {
  const auto& verts = m.knots()[m.knot_of(v)].verts;
  return static_cast<int>(std::find(verts.begin(), verts.end(), v) - verts.begin());
}

// Passages of a self-clasp sit opposite each other on a 4-cycle.
bool alternating_self_clasp(const FalMap& m, int c) {
  const Clasp& cl = m.clasps()[c];
  if (!m.is_self_clasp(c) || m.knots()[m.knot_of(cl.verts[0])].verts.size() != 4) return false;
  return std::abs(position(m, cl.verts[0]) - position(m, cl.verts[1])) == 2;
}

// The clasps other than `skip` join the knot circles in one cycle, each
// knot circle carrying exactly two of them.
bool ring(const FalMap& m, int skip) {
  const int n = m.knot_count();
  std::vector<int> deg(n, 0), parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int edges = 0;
  for (int c = 0; c < m.clasp_count(); ++c) {
    if (c == skip) continue;
    if (m.is_self_clasp(c)) return false;
    int a = m.knot_of(m.clasps()[c].verts[0]), b = m.knot_of(m.clasps()[c].verts[1]);
    ++deg[a], ++deg[b], ++edges;
    parent[find(a)] = find(b);
  }
  for (int k = 0; k < n; ++k)
    if (deg[k] != 2 || find(k) != find(0)) return false;
  return edges == n;
}

}  // namespace

ReflectionClass reflection_class(const FalMap& m) {
  using K = ReflectionClass::Kind;
  const int nk = m.knot_count(), nc = m.clasp_count();
  if (nk == 1 && nc == 2 && alternating_self_clasp(m, 0) && alternating_self_clasp(m, 1))
    return {K::ThreeRS_Borromean, 0};

  std::vector<int> selfs;
  for (int c = 0; c < nc; ++c)
    if (m.is_self_clasp(c)) selfs.push_back(c);
  const auto faces = reflection_faces(m);

  if (nk >= 3 && nc == nk && selfs.empty()) {
    bool short_knots = true;
    for (const KnotCycle& k : m.knots()) short_knots = short_knots && k.verts.size() == 2;
    bool hub = std::any_of(faces.begin(), faces.end(), [&](const ReflectionFace& f) {
      return static_cast<int>(f.boundary.size()) == nk && f.punctures.empty();
    });
    if (short_knots && hub && ring(m, -1)) return {K::TwoRS_P, nk};
  }

  if (nk >= 2 && nc == nk + 1 && selfs.size() == 1 && alternating_self_clasp(m, selfs[0])) {
    const int c0 = selfs[0], k0 = m.knot_of(m.clasps()[c0].verts[0]);
    bool short_knots = true;
    for (int k = 0; k < nk; ++k) short_knots = short_knots && (k == k0 || m.knots()[k].verts.size() == 2);
    // Removing C_0 leaves P_n, and C_0 pierces the face bounded by every
    // knot circle, which then holds no other puncture.
    std::vector<int> tips{m.clasps()[c0].verts[0], m.clasps()[c0].verts[1]};
    std::sort(tips.begin(), tips.end());
    bool hub = std::any_of(faces.begin(), faces.end(), [&](const ReflectionFace& f) {
      std::vector<int> p = f.punctures;
      std::sort(p.begin(), p.end());
      return static_cast<int>(f.boundary.size()) == nk && p == tips;
    });
    if (short_knots && hub && ring(m, c0)) return {K::TwoRS_O, nk};
  }
  return {K::UniqueRS, 0};
}

Budget Budget::from_env() {
  Budget b;
  if (const char* s = std::getenv("FAL_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) b.max_forms = v;
  }
  return b;
}

namespace {

std::string code_string(const Code& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  return os.str();
}

std::string component_of_dart(const FalMap& m, int d) {
  const int v = FalMap::vertex_of(d);
  return FalMap::is_clasp_dart(d) ? m.clasps()[m.clasp_of(v)].name : m.knots()[m.knot_of(v)].name;
}

struct SearchResult {
  bool found = false;
  std::vector<RewriteStep> steps;
  FalMap end;
  std::size_t explored = 0;
  int depth = 0;
  bool exhausted = false;
};

SearchResult search(const FalMap& a, const FalMap& b, const Budget& budget) {
  struct Node {
    FalMap m;
    int parent;
    RewriteStep step;
    int depth;
  };
  SearchResult r;
  const Code target = canonical_form(b);
  std::vector<Node> nodes{{a, -1, {}, 0}};
  std::map<Code, int> seen{{canonical_form(a), 0}};
  int hit = seen.begin()->first == target ? 0 : -1;
  bool cut = false;
  std::deque<int> queue{0};
  while (hit < 0 && !queue.empty()) {
    const int at = queue.front();
    queue.pop_front();
    if (nodes[at].depth >= budget.max_depth) {
      cut = true;
      continue;
    }
    for (auto& [next, step] : rewrites(nodes[at].m)) {
      Code c = canonical_form(next);
      if (seen.count(c)) continue;
      if (seen.size() >= budget.max_forms) {
        cut = true;
        queue.clear();
        break;
      }
      const int id = static_cast<int>(nodes.size());
      seen.emplace(c, id);
      nodes.push_back({std::move(next), at, step, nodes[at].depth + 1});
      r.depth = std::max(r.depth, nodes[id].depth);
      if (c == target) {
        hit = id;
        break;
      }
      queue.push_back(id);
    }
  }
  r.explored = seen.size();
  r.exhausted = hit < 0 && !cut;
  if (hit < 0) return r;
  r.found = true;
  r.end = nodes[hit].m;
  for (int n = hit; nodes[n].parent >= 0; n = nodes[n].parent) r.steps.push_back(nodes[n].step);
  std::reverse(r.steps.begin(), r.steps.end());
  return r;
}

std::map<std::string, std::string> bijection(const FalMap& a, const FalMap& end, const FalMap& b,
                                             const std::vector<RewriteStep>& steps) {
  std::map<std::string, std::string> cur;
  for (const KnotCycle& k : a.knots()) cur[k.name] = k.name;
  for (const Clasp& c : a.clasps()) cur[c.name] = c.name;
  for (const RewriteStep& s : steps)
    for (auto& [from, to] : cur)
      if (auto it = s.rename.find(to); it != s.rename.end()) to = it->second;
  std::vector<int> iso = map_isomorphism(end, b);
  std::map<std::string, std::string> image;
  for (int d = 0; d < static_cast<int>(iso.size()); ++d) image[component_of_dart(end, d)] = component_of_dart(b, iso[d]);
  std::map<std::string, std::string> out;
  for (auto& [from, to] : cur) out[from] = image.count(to) ? image[to] : std::string();
  return out;
}

}  // namespace

std::vector<std::pair<FalMap, RewriteStep>> rewrites(const FalMap& m) {
  std::vector<std::pair<FalMap, RewriteStep>> out;
  for (int c = 0; c < m.clasp_count(); ++c) {
    auto alts = crossing_disks(m, c);
    for (std::size_t i = 1; i < alts.size(); ++i) {
      RewriteStep s;
      s.kind = RewriteKind::Flype;
      s.clasp = m.clasps()[c].name;
      s.alternate = static_cast<int>(i);
      out.emplace_back(flype(m, c, alts[i]), s);
    }
  }
  for (int k = 0; k < m.knot_count(); ++k)
    if (auto sig = decompose(m, k, false)) out.push_back(full_swap(m, *sig));
  RewriteStep mir;
  mir.kind = RewriteKind::Mirror;
  out.emplace_back(mirror(m), mir);
  return out;
}

std::vector<Witness> invariant_witnesses(const FalMap& a, const FalMap& b) {
  std::vector<Witness> out;
  if (a.component_count() != b.component_count())
    out.push_back({"component count", std::to_string(a.component_count()), std::to_string(b.component_count())});
  auto census = [](const FalMap& m) {
    return std::to_string(m.knot_count()) + " knot, " + std::to_string(m.clasp_count()) + " crossing";
  };
  if (a.knot_count() != b.knot_count()) out.push_back({"knot/crossing census", census(a), census(b)});
  Code ia = incidence_multigraph(a), ib = incidence_multigraph(b);
  if (ia != ib) out.push_back({"incidence multigraph", code_string(ia), code_string(ib)});
  return out;
}

bool replay(const FalMap& a, const FalMap& b, const std::vector<RewriteStep>& certificate) {
  FalMap m = a;
  for (const RewriteStep& s : certificate) m = apply(m, s);
  return canonical_form(m) == canonical_form(b);
}

EquivalenceVerdict decide_equivalent(const FalMap& a, const FalMap& b, Budget budget) {
  using V = EquivalenceVerdict::Kind;
  EquivalenceVerdict v;
  if (budget.max_depth <= 0) budget.max_depth = 2 * std::max(a.clasp_count(), b.clasp_count());
  v.budget = budget;

  if (auto ws = invariant_witnesses(a, b); !ws.empty()) {
    v.kind = V::Distinct;
    v.method = "invariant";
    v.witness = ws.front();
    return v;
  }

  const ReflectionClass ra = reflection_class(a), rb = reflection_class(b);
  const bool multi = ra.multiple() || rb.multiple();
  if (multi && ra != rb) {
    v.kind = V::Distinct;
    v.method = "reflection-class";
    v.witness = {"reflection class", ra.to_string(), rb.to_string()};
    return v;
  }

  SearchResult r = search(a, b, budget);
  v.explored = r.explored;
  v.depth = r.depth;
  v.exhausted = r.exhausted;
  if (r.found) {
    v.kind = V::Equivalent;
    v.method = r.steps.empty() ? "canonical" : "orbit";
    v.certificate = r.steps;
    v.bijection = bijection(a, r.end, b, r.steps);
    return v;
  }
  if (multi) {
    // Same multi-surface class: the links are equivalent even though no
    // rewrite path was found within budget.
    v.kind = V::Equivalent;
    v.method = "reflection-class";
    return v;
  }
  v.kind = V::Unknown;
  v.method = a.knot_count() == 1 ? "single-knot-orbit" : "orbit";
  return v;
}

SymmetryReport symmetry_report(const FalMap& m) {
  SymmetryReport r;
  r.decompositions = detect_signature(m);
  r.kind = r.decompositions.empty() ? SymmetryReport::Kind::Coincide : SymmetryReport::Kind::ExtraFullSwaps;
  return r;
}

}  // namespace fal
