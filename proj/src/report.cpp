#include "fal/report.hpp"

namespace fal::report {

namespace {

std::string edge_name(const FalMap& m, int d) {
  return m.vertex_names()[FalMap::vertex_of(d)] + "-" + m.vertex_names()[FalMap::vertex_of(m.alpha(d))];
}

Json component_set(const FalMap& m, const std::set<ComponentRef>& s) {
  Json out = Json::array();
  for (ComponentRef r : s) out.push_back(m.component_name(r));
  return out;
}

std::string chord_label(const FalMap& m, const SeparatingQuadruple& q) { return m.clasps()[q.chord].name; }

}  // namespace

Json envelope(const std::string& kind) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = kind;
  return j;
}

Json summary(const FalMap& m) {
  Json j;
  j["vertices"] = m.vertex_count();
  j["knot_circles"] = Json::array();
  for (const KnotCycle& k : m.knots()) j["knot_circles"].push_back(k.name);
  j["crossing_circles"] = Json::array();
  for (const Clasp& c : m.clasps()) j["crossing_circles"].push_back(c.name);
  j["components"] = m.component_count();
  return j;
}

Json to_json(const ValidationReport& r) {
  Json j;
  j["ok"] = r.ok();
  j["connected"] = r.connected;
  j["two_clasps"] = r.two_clasps;
  j["knots_linked"] = r.knots_linked;
  j["twist_reduced"] = r.twist_reduced;
  j["prime"] = r.prime;
  j["messages"] = r.messages;
  return j;
}

Json to_json(const Code& c) { return Json(std::vector<std::int32_t>(c.begin(), c.end())); }

Json to_json(const FalMap& m, const DiskTrace& t) {
  Json j;
  j["type"] = to_string(t.kind);
  if (t.clasp >= 0) j["crossing_circle"] = m.clasps()[t.clasp].name;
  if (t.kind == DiskKind::CrossingDisk) j["designated"] = t.designated;
  j["punctures"] = Json::array();
  for (const Puncture& p : t.punctures)
    j["punctures"].push_back({{"component", m.component_name(p.comp)}, {"slope", to_string(p.slope)}});
  if (!t.crossed.empty()) {
    j["crossed"] = Json::array();
    for (int x : t.crossed) j["crossed"].push_back(edge_name(m, x));
  }
  if (!t.arcs.empty()) {
    j["arcs"] = Json::array();
    for (const auto& a : t.arcs) j["arcs"].push_back({m.vertex_names()[a[0]], m.vertex_names()[a[1]]});
  }
  j["faces"] = t.faces;
  return j;
}

Json to_json(const FalMap& m, const ReflectionFace& f) {
  Json j;
  j["boundary"] = Json::array();
  for (const auto& b : f.boundary)
    j["boundary"].push_back({{"knot_circle", m.knots()[b.knot].name}, {"side", b.left ? "left" : "right"}});
  j["punctures"] = Json::array();
  for (int v : f.punctures)
    j["punctures"].push_back({{"crossing_circle", m.clasps()[m.clasp_of(v)].name}, {"at", m.vertex_names()[v]}});
  j["puncture_count"] = f.puncture_count();
  return j;
}

Json to_json(const FalMap& m, const SignatureDecomposition& s) {
  Json j;
  j["k_f"] = m.knots()[s.k_f].name;
  j["pairs"] = Json::array();
  for (int i = 0; i < s.n(); ++i)
    j["pairs"].push_back({{"index", i + 1},
                          {"crossing_circle", m.clasps()[s.pairs[i].clasp].name},
                          {"knot_circle", m.knots()[s.pairs[i].knot].name},
                          {"at", m.vertex_names()[s.alpha_order[i]]}});
  j["chords"] = Json::array();
  for (const SignatureChord& c : s.chords)
    j["chords"].push_back({{"crossing_circle", m.clasps()[c.clasp].name}, {"i", c.i}, {"j", c.j}});
  j["noncrossing"] = chords_noncrossing(s);
  return j;
}

Json to_json(const RewriteStep& s) {
  Json j;
  j["kind"] = to_string(s.kind);
  if (s.kind == RewriteKind::Flype) {
    j["crossing_circle"] = s.clasp;
    j["alternate"] = s.alternate;
  }
  if (s.kind == RewriteKind::FullSwap) j["k_f"] = s.k_f;
  j["slope_swapped"] = s.slope_swapped;
  j["rename"] = Json::object();
  for (const auto& [a, b] : s.rename) j["rename"][a] = b;
  if (!s.vertex_rename.empty()) {
    j["vertex_rename"] = Json::object();
    for (const auto& [a, b] : s.vertex_rename) j["vertex_rename"][a] = b;
  }
  return j;
}

Json to_json(const ReflectionClass& c) {
  Json j;
  j["class"] = c.to_string();
  j["multiple_reflection_surfaces"] = c.multiple();
  if (c.n) j["n"] = c.n;
  return j;
}

Json to_json(const EquivalenceVerdict& v) {
  Json j;
  j["verdict"] = to_string(v.kind);
  j["method"] = v.method;
  if (v.kind == EquivalenceVerdict::Kind::Equivalent) {
    j["certificate"] = Json::array();
    for (const RewriteStep& s : v.certificate) j["certificate"].push_back(to_json(s));
    j["bijection"] = Json::object();
    for (const auto& [a, b] : v.bijection) j["bijection"][a] = b;
  }
  if (v.kind == EquivalenceVerdict::Kind::Distinct)
    j["witness"] = {{"invariant", v.witness.invariant}, {"a", v.witness.a}, {"b", v.witness.b}};
  j["search"] = {{"explored", v.explored},
                 {"depth", v.depth},
                 {"exhausted", v.exhausted},
                 {"max_depth", v.budget.max_depth},
                 {"max_forms", v.budget.max_forms}};
  return j;
}

Json to_json(const FalMap& m, const SymmetryReport& r) {
  Json j;
  j["symmetry"] = r.kind == SymmetryReport::Kind::Coincide ? "Coincide" : "ExtraFullSwaps";
  j["decompositions"] = Json::array();
  for (const auto& s : r.decompositions) j["decompositions"].push_back(to_json(m, s));
  return j;
}

Json to_json(const FalMap& m, const SeparatingPair& p) {
  Json j;
  j["crossing_circle"] = m.clasps()[p.shared_longitude].name;
  j["disks"] = {to_json(m, p.first), to_json(m, p.second)};
  return j;
}

Json to_json(const FalMap& m, const SeparatingQuadruple& q) {
  Json j;
  j["chord"] = chord_label(m, q);
  j["i"] = q.i;
  j["j"] = q.j;
  j["disks"] = {to_json(m, q.d_i), to_json(m, q.d_j), to_json(m, q.d_ij), to_json(m, q.d_long)};
  return j;
}

Json to_json(const FalMap& m, const std::vector<SeparatingQuadruple>& quads, const InsideOrder& o) {
  Json j;
  j["alpha"] = o.alpha;
  j["intervals"] = Json::object();
  for (std::size_t q = 0; q < quads.size(); ++q) j["intervals"][chord_label(m, quads[q])] = o.interval[q];
  // Covering pairs only: a < b with nothing strictly between.
  j["covers"] = Json::array();
  for (const auto& r : o.relation) {
    bool cover = true;
    for (std::size_t c = 0; c < quads.size() && cover; ++c)
      cover = !(o.less(r[0], static_cast<int>(c)) && o.less(static_cast<int>(c), r[1]));
    if (cover) j["covers"].push_back({chord_label(m, quads[r[0]]), chord_label(m, quads[r[1]])});
  }
  return j;
}

Json to_json(const FalMap& m, const std::vector<SeparatingQuadruple>& quads, const StandardBall& b) {
  Json j;
  j["alpha"] = b.alpha;
  auto names = [&](const std::vector<int>& qs) {
    Json a = Json::array();
    for (int q : qs) a.push_back(chord_label(m, quads[q]));
    return a;
  };
  j["outermost"] = names(b.outermost);
  j["run"] = names(b.subsequence);
  j["sphere_punctures"] = Json::array();
  for (int k : b.sphere_punctures) j["sphere_punctures"].push_back(m.knots()[k].name);
  j["enclosed"] = component_set(m, b.enclosed);
  j["excluded"] = component_set(m, b.excluded);
  j["certificate"] = {{"ok", b.certificate_ok}};
  if (b.certificate_ok)
    j["certificate"]["crossed_edges"] = {edge_name(m, 3 * b.certificate[0]), edge_name(m, 3 * b.certificate[1])};
  return j;
}

}  // namespace fal::report
