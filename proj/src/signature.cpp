#include "fal/signature.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fal {

int SignatureDecomposition::index_of_knot(int knot) const {
  for (int i = 0; i < n(); ++i)
    if (pairs[i].knot == knot) return i + 1;
  return 0;
}

namespace {

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

// Side of K_f (0 or 1) containing each face: faces merged across every edge
// except K_f's own.
std::vector<int> sides_of(const FalMap& m, int k_f) {
  std::vector<int> p(m.face_count());
  std::iota(p.begin(), p.end(), 0);
  auto find = [&](int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  };
  for (int d = 0; d < m.dart_count(); ++d) {
    if (!FalMap::is_clasp_dart(d) && m.knot_of(d / 3) == k_f) continue;
    p[find(m.face_of(d))] = find(m.face_of(m.alpha(d)));
  }
  int v = m.knots()[k_f].verts[0];
  int left = find(m.face_of(3 * v));
  std::vector<int> out(m.face_count());
  for (int f = 0; f < m.face_count(); ++f) out[f] = find(f) == left ? 0 : 1;
  return out;
}

}  // namespace

std::optional<SignatureDecomposition> decompose(const FalMap& m, int k_f, bool require_chords,
                                                std::string* why) {
  auto no = [&](const std::string& msg) -> std::optional<SignatureDecomposition> {
    fail(why, msg);
    return std::nullopt;
  };
  if (k_f < 0 || k_f >= m.knot_count()) throw std::out_of_range("decompose: no knot circle " + std::to_string(k_f));
  if (m.knot_count() < 2) return no("K would be empty");
  for (int c = 0; c < m.clasp_count(); ++c)
    if (m.is_self_clasp(c)) return no("crossing circle " + m.clasps()[c].name + " links one knot circle twice");

  SignatureDecomposition s;
  s.k_f = k_f;
  std::vector<int> links(m.knot_count(), 0);
  for (int v : m.knots()[k_f].verts) {
    int c = m.clasp_of(v), k = m.knot_of(m.partner(v));
    ++links[k];
    s.pairs.push_back({c, k});
    s.alpha_order.push_back(v);
  }
  for (int k = 0; k < m.knot_count(); ++k) {
    if (k == k_f) continue;
    if (links[k] != 1)
      return no("knot circle " + m.knots()[k].name + " is linked to " + m.knots()[k_f].name + " by " +
                std::to_string(links[k]) + " crossing circles");
  }
  for (int c = 0; c < m.clasp_count(); ++c) {
    const Clasp& cl = m.clasps()[c];
    int a = m.knot_of(cl.verts[0]), b = m.knot_of(cl.verts[1]);
    if (a == k_f || b == k_f) continue;
    int i = s.index_of_knot(a), j = s.index_of_knot(b);
    if (i > j) std::swap(i, j);
    s.chords.push_back({c, i, j});
  }
  if (s.chords.empty()) return no("no crossing circle links two knot circles of K");
  if (require_chords) {
    std::vector<int> deg(s.n() + 1, 0);
    for (const SignatureChord& ch : s.chords) ++deg[ch.i], ++deg[ch.j];
    for (int i = 1; i <= s.n(); ++i)
      if (deg[i] == 0) return no("knot circle " + m.knots()[s.pairs[i - 1].knot].name + " carries no chord");
  }
  std::vector<int> side = sides_of(m, k_f);
  int first = -1;
  for (int k = 0; k < m.knot_count(); ++k) {
    if (k == k_f) continue;
    int sd = side[m.face_of(3 * m.knots()[k].verts[0])];
    if (first < 0) first = sd;
    if (sd != first) return no("knot circles lie on both sides of " + m.knots()[k_f].name);
  }
  std::sort(s.chords.begin(), s.chords.end(), [](const SignatureChord& a, const SignatureChord& b) {
    return std::tie(a.i, a.j, a.clasp) < std::tie(b.i, b.j, b.clasp);
  });
  s.disk_choice.assign(s.n(), 0);
  return s;
}

std::vector<SignatureDecomposition> detect_signature(const FalMap& m) {
  std::vector<std::pair<Code, SignatureDecomposition>> found;
  for (int k = 0; k < m.knot_count(); ++k) {
    auto s = decompose(m, k);
    if (!s) continue;
    DartMap dm = m.dart_map();
    for (int d = 0; d < dm.size(); ++d)
      if (!FalMap::is_clasp_dart(d)) dm.label[d] = m.knot_of(d / 3) == k ? 0 : 2;
    found.push_back({canonical_code(dm), *s});
  }
  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SignatureDecomposition> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

bool is_signature(const FalMap& m) { return !detect_signature(m).empty(); }

bool chords_noncrossing(const SignatureDecomposition& s) {
  for (const auto& a : s.chords)
    for (const auto& b : s.chords) {
      if (a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j) continue;
      bool bi = a.i < b.i && b.i < a.j, bj = a.i < b.j && b.j < a.j;
      if (bi != bj) return false;
    }
  return true;
}

}  // namespace fal
