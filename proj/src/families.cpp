#include "fal/families.hpp"

#include <algorithm>

namespace fal {

namespace {

std::string s(int i) { return std::to_string(i); }

void bound(bool ok, const std::string& what) {
  if (!ok) throw FamilyError(FamilyError::Kind::Bounds, what);
}

bool crosses(const Chord& a, const Chord& b) {
  auto inside = [&](int x) { return a.first < x && x < a.second; };
  bool shared = a.first == b.first || a.first == b.second || a.second == b.first ||
                a.second == b.second;
  return !shared && inside(b.first) != inside(b.second);
}

}  // namespace

FalMap augment_flatten(const TwistRegionDiagram& d) {
  for (const Clasp& c : d.skeleton.clasps()) {
    auto it = d.twists.find(c.name);
    if (it == d.twists.end())
      throw FamilyError(FamilyError::Kind::Bounds, "no twist count for " + c.name, c.name);
    if (it->second % 2 != 0)
      throw FamilyError(FamilyError::Kind::OddTwist,
                        "odd twist count on " + c.name + " leaves a half-twist", c.name);
  }
  for (const auto& [name, t] : d.twists)
    if (d.skeleton.find_clasp(name) < 0)
      throw FamilyError(FamilyError::Kind::Bounds, "twist count for unknown clasp " + name, name);
  ValidationReport r = validate(d.skeleton);
  if (!r.ok())
    throw FamilyError(FamilyError::Kind::ValidationFailure,
                      r.messages.empty() ? "skeleton fails validation" : r.messages.front());
  return d.skeleton;
}

FalMap borromean() {
  return FalBuilder()
      .knot("K1", {"a1", "b1", "a2", "b2"})
      .clasp("C1", "a1", Side::Left, "a2", Side::Left)
      .clasp("C2", "b1", Side::Right, "b2", Side::Right)
      .build();
}

FalMap chain_p(int n) {
  bound(n >= 3, "chain_p needs n >= 3");
  FalBuilder b;
  for (int i = 1; i <= n; ++i) b.knot("K" + s(i), {"u" + s(i), "v" + s(i)});
  for (int i = 1; i <= n; ++i)
    b.clasp("C" + s(i), "v" + s(i), Side::Left, "u" + s(i % n + 1), Side::Left);
  return b.build();
}

FalMap chain_o(int n) {
  bound(n >= 2, "chain_o needs n >= 2");
  FalBuilder b;
  // C0 crosses the inside of K1; both of its punctures land in the face
  // bounded by every knot circle.
  b.knot("K1", {"u1", "x", "v1", "y"});
  for (int i = 2; i <= n; ++i) b.knot("K" + s(i), {"u" + s(i), "v" + s(i)});
  b.clasp("C0", "x", Side::Right, "y", Side::Right);
  for (int i = 1; i <= n; ++i)
    b.clasp("C" + s(i), "v" + s(i), Side::Left, "u" + s(i % n + 1), Side::Left);
  return b.build();
}

FalMap pretzel(int n) {
  bound(n >= 2, "pretzel needs n >= 2");
  std::vector<Chord> chords;
  for (int i = 1; i < n; ++i) chords.push_back({i, i + 1});
  return signature_link(n, chords);
}

std::string chord_name(int i, int j) {
  if (i > j) std::swap(i, j);
  return j < 10 ? "C" + s(i) + s(j) : "C" + s(i) + "x" + s(j);
}

FalMap signature_link(int n, const std::vector<Chord>& chords_in) {
  bound(n >= 1, "signature link needs n >= 1");
  std::vector<Chord> chords;
  for (Chord c : chords_in) {
    if (c.first > c.second) std::swap(c.first, c.second);
    bound(c.first >= 1 && c.second <= n && c.first < c.second, "chord out of range");
    chords.push_back(c);
  }
  std::sort(chords.begin(), chords.end());
  bound(std::adjacent_find(chords.begin(), chords.end()) == chords.end(), "repeated chord");
  for (std::size_t a = 0; a < chords.size(); ++a)
    for (std::size_t b = a + 1; b < chords.size(); ++b)
      bound(!crosses(chords[a], chords[b]), "chords interleave");

  auto pass = [](int i, int j) { return "k" + s(i) + "c" + s(j); };
  std::vector<std::vector<std::string>> cycles(n + 1);
  std::vector<std::string> kf;
  for (int i = 1; i <= n; ++i) kf.push_back("d" + s(i));
  bool degenerate = false;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> lo, hi;
    for (const Chord& c : chords) {
      if (c.first == i) hi.push_back(c.second);
      if (c.second == i) lo.push_back(c.first);
    }
    std::sort(lo.rbegin(), lo.rend());
    std::sort(hi.rbegin(), hi.rend());
    cycles[i].push_back("c" + s(i));
    for (int j : lo) cycles[i].push_back(pass(i, j));
    for (int j : hi) cycles[i].push_back(pass(i, j));
    if (cycles[i].size() < 2) degenerate = true;
  }
  // Every circle carries its passages on one side; search the side of each
  // circle until the rotation system is planar.
  const int circles = n + 1;
  for (long mask = 0; mask < (1L << circles); ++mask) {
    auto side = [&](int circle) { return (mask >> circle) & 1 ? Side::Right : Side::Left; };
    FalBuilder b;
    b.knot("Kf", kf);
    for (int i = 1; i <= n; ++i) b.knot("K" + s(i), cycles[i]);
    for (int i = 1; i <= n; ++i) b.clasp("C" + s(i), "d" + s(i), side(0), "c" + s(i), side(i));
    for (const Chord& c : chords)
      b.clasp(chord_name(c.first, c.second), pass(c.first, c.second), side(c.first),
              pass(c.second, c.first), side(c.second));
    try {
      return b.build(degenerate);
    } catch (const FalError& e) {
      if (e.kind() != FalError::Kind::Genus) throw;
    }
  }
  throw FamilyError(FamilyError::Kind::Bounds, "no planar side assignment for chord set");
}

FalMap figure14() { return signature_link(5, {{1, 2}, {1, 4}, {2, 4}, {3, 4}, {4, 5}}); }

FalMap figure15() { return signature_link(7, {{1, 2}, {2, 5}, {3, 5}, {5, 6}, {5, 7}}); }

std::vector<Chord> random_noncrossing_chords(std::mt19937_64& rng, int n) {
  std::vector<Chord> all;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) all.push_back({i, j});
  while (true) {
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Chord> out;
    std::bernoulli_distribution keep(0.6);
    for (const Chord& c : all) {
      if (!keep(rng)) continue;
      bool ok = true;
      for (const Chord& o : out) ok = ok && !crosses(c, o);
      if (ok) out.push_back(c);
    }
    std::vector<int> used(n + 1, 0);
    for (const Chord& c : out) used[c.first] = used[c.second] = 1;
    if (std::count(used.begin() + 1, used.end(), 1) == n) {
      std::sort(out.begin(), out.end());
      return out;
    }
  }
}

FalMap random_signature(std::mt19937_64& rng, int max_knots) {
  bound(max_knots >= 3, "random signature links need at least 3 knot circles");
  std::uniform_int_distribution<int> pick(2, max_knots - 1);
  while (true) {
    int n = pick(rng);
    FalMap m = signature_link(n, random_noncrossing_chords(rng, n));
    if (validate(m).ok()) return m;
  }
}

}  // namespace fal
