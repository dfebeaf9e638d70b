#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "fal/families.hpp"
#include "fal/falmap.hpp"
#include "oracles.hpp"

using namespace fal;

namespace {

// Euler characteristic of a FalSpec rotation system, traced by hand here.
bool planar_by_hand(const FalSpec& s) {
  const int n = static_cast<int>(s.vertex_names.size());
  std::vector<int> succ(n), pred(n), mate(n);
  for (const auto& k : s.knots)
    for (std::size_t i = 0; i < k.verts.size(); ++i) {
      succ[k.verts[i]] = k.verts[(i + 1) % k.verts.size()];
      pred[k.verts[(i + 1) % k.verts.size()]] = k.verts[i];
    }
  for (const auto& c : s.clasps) mate[c.verts[0]] = c.verts[1], mate[c.verts[1]] = c.verts[0];
  std::vector<int> alpha(3 * n), sinv(3 * n);
  for (int v = 0; v < n; ++v) {
    alpha[3 * v] = 3 * succ[v] + 1;
    alpha[3 * v + 1] = 3 * pred[v];
    alpha[3 * v + 2] = 3 * mate[v] + 2;
    bool left = s.sides[v] == Side::Left;
    // sigma^-1: Left ccw = (next, clasp, prev).
    int nx = 3 * v, cl = 3 * v + 2, pv = 3 * v + 1;
    if (left) sinv[cl] = nx, sinv[pv] = cl, sinv[nx] = pv;
    else sinv[pv] = nx, sinv[cl] = pv, sinv[nx] = cl;
  }
  std::vector<int> seen(3 * n, 0);
  int faces = 0;
  for (int d0 = 0; d0 < 3 * n; ++d0) {
    if (seen[d0]) continue;
    ++faces;
    for (int d = d0; !seen[d]; d = sinv[alpha[d]]) seen[d] = 1;
  }
  return n - 3 * n / 2 + faces == 2;  // callers pass connected maps
}

FalMap random_valid(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  switch (pick(rng)) {
    case 0: return chain_p(3 + static_cast<int>(rng() % 5));
    case 1: return chain_o(2 + static_cast<int>(rng() % 5));
    case 2: return pretzel(2 + static_cast<int>(rng() % 6));
    default: return random_signature(rng, 8);
  }
}

}  // namespace

TEST_CASE("parse reads the documented format") {
  FalMap m = parse(
      "fal 1\n"
      "# Borromean rings as one knot circle and two self clasps\n"
      "knot K1 = a1 b1 a2 b2\n"
      "clasp C1 = a1:L a2:L\n"
      "clasp C2 = b1:R b2:R   # trailing comment\n");
  CHECK(m.knot_count() == 1);
  CHECK(m.clasp_count() == 2);
  CHECK(m.knots()[0].verts.size() == 4);
  CHECK(canonical_form(m) == canonical_form(borromean()));
}

TEST_CASE("parse reports syntax errors with line and column") {
  auto kind_of = [](const std::string& text) {
    try {
      parse(text);
    } catch (const FalError& e) {
      return std::make_pair(e.kind(), std::string(e.what()));
    }
    return std::make_pair(FalError::Kind::Syntax, std::string("no error"));
  };
  auto [k1, w1] = kind_of("fal 1\nknot K = a b\nclasp C = a:X b:L\n");
  CHECK(k1 == FalError::Kind::Syntax);
  CHECK(w1.find("line 3:") != std::string::npos);
  auto [k2, w2] = kind_of("knot K = a b\n");
  CHECK(k2 == FalError::Kind::Syntax);
  CHECK(w2.find("line 1:1") != std::string::npos);
  auto [k3, w3] = kind_of("fal 1\nlink K = a b\n");
  CHECK(w3.find("line 2:1") != std::string::npos);
}

TEST_CASE("structural errors") {
  auto kind_of = [](const std::string& text) {
    try {
      parse(text);
    } catch (const FalError& e) {
      return e.kind();
    }
    FAIL("accepted: " << text);
    return FalError::Kind::Syntax;
  };
  // A single-passage knot cycle parses as a skeleton and fails (c).
  const std::string one_pass = "fal 1\nknot K1 = a\nknot K2 = b c d\nclasp C1 = a:L b:L\nclasp C2 = c:L d:L\n";
  FalMap deg = parse(one_pass);
  CHECK(deg.degenerate());
  CHECK_FALSE(validate(deg).knots_linked);
  // Vertex on two knots.
  CHECK(kind_of("fal 1\nknot K1 = a b\nknot K2 = b c\nclasp C = a:L c:L\n") == FalError::Kind::Structure);
  // Unmatched vertex.
  CHECK(kind_of("fal 1\nknot K1 = a b c d\nclasp C = a:L b:L\n") == FalError::Kind::Structure);
}

TEST_CASE("flipping one side bit of P3 is accepted exactly when the faces still close up") {
  const FalSpec base = chain_p(3).spec();
  int rejected = 0;
  for (std::size_t v = 0; v < base.sides.size(); ++v) {
    FalSpec s = base;
    s.sides[v] = flipped(s.sides[v]);
    const bool planar = planar_by_hand(s);
    bool built = true;
    try {
      FalMap::build(s);
    } catch (const FalError& e) {
      CHECK(e.kind() == FalError::Kind::Genus);
      built = false;
    }
    CHECK(built == planar);
    rejected += !built;
  }
  CHECK(rejected > 0);
}

TEST_CASE("serialize round trip is label exact and deterministic") {
  for (const FalMap& m : {chain_p(3), borromean(), chain_o(4), pretzel(5), figure14()}) {
    const std::string t = serialize(m);
    CHECK(parse(t) == m);
    CHECK(serialize(parse(t)) == t);
  }
  const std::string b = serialize(borromean());
  std::size_t clasps = 0;
  for (std::size_t p = b.find("clasp "); p != std::string::npos; p = b.find("clasp ", p + 1)) ++clasps;
  CHECK(clasps == 2);
  FalMap f15 = figure15();
  CHECK(parse(serialize(f15)) == f15);
}

TEST_CASE("validate on generators and on one-clasp / split inputs") {
  CHECK(validate(chain_p(4)).ok());
  FalMap one = parse("fal 1\nknot K1 = a b\nclasp C = a:R b:R\n");
  ValidationReport r = validate(one);
  CHECK_FALSE(r.two_clasps);
  CHECK_FALSE(r.ok());
  // Two disjoint copies of P3.
  FalSpec s = chain_p(3).spec();
  FalSpec t = s;
  const int off = static_cast<int>(s.vertex_names.size());
  for (auto& n : t.vertex_names) s.vertex_names.push_back(n + "x");
  for (auto k : t.knots) {
    for (int& v : k.verts) v += off;
    k.name += "x";
    s.knots.push_back(k);
  }
  for (auto c : t.clasps) {
    for (int& v : c.verts) v += off;
    c.name += "x";
    s.clasps.push_back(c);
  }
  s.sides.insert(s.sides.end(), t.sides.begin(), t.sides.end());
  ValidationReport split = validate(FalMap::build(s));
  CHECK_FALSE(split.connected);
}

TEST_CASE("a parallel clasp on the same strand pair breaks twist reduction") {
  // Add a second clasp beside C1 of P3; keep the planar configurations and
  // require one whose new face is the bigon-like 4-gon clasp/knot/clasp/knot.
  const FalMap p3 = chain_p(3);
  const int c1 = p3.find_clasp("C1");
  const int u = p3.clasps()[c1].verts[0], w = p3.clasps()[c1].verts[1];
  int failing = 0;
  for (int order = 0; order < 4; ++order)
    for (int sides = 0; sides < 4; ++sides) {
      FalSpec s = p3.spec();
      const int a = static_cast<int>(s.vertex_names.size()), b = a + 1;
      s.vertex_names.push_back("pa");
      s.vertex_names.push_back("pb");
      auto insert = [&](int at, int nv, bool after) {
        for (auto& k : s.knots) {
          auto it = std::find(k.verts.begin(), k.verts.end(), at);
          if (it != k.verts.end()) {
            k.verts.insert(after ? it + 1 : it, nv);
            return;
          }
        }
      };
      insert(u, a, order & 1);
      insert(w, b, order & 2);
      s.clasps.push_back({"Cp", {a, b}});
      s.sides.push_back(sides & 1 ? Side::Right : Side::Left);
      s.sides.push_back(sides & 2 ? Side::Right : Side::Left);
      if (!planar_by_hand(s)) continue;
      FalMap m = FalMap::build(s);
      ValidationReport r = validate(m);
      bool four_gon = false;
      for (const auto& f : m.face_darts()) {
        if (f.size() != 4) continue;
        int cl = 0;
        for (int d : f) cl += FalMap::is_clasp_dart(d);
        four_gon = four_gon || (cl == 2 && FalMap::is_clasp_dart(f[0]) != FalMap::is_clasp_dart(f[1]));
      }
      CHECK(r.twist_reduced == !four_gon);
      failing += four_gon;
    }
  CHECK(failing > 0);
}

TEST_CASE("prime check agrees with the edge-deletion bond oracle") {
  int bonds = 0, total = 0;
  for (int c = 2; c <= 3; ++c)
    oracle::enumerate_labeled(c, [&](const FalMap& m) {
      if (!validate(m).connected) return;
      ++total;
      const bool oracle_bond = oracle::has_knot_bond(m);
      CHECK(two_bonds(m).empty() == !oracle_bond);
      bonds += oracle_bond;
    });
  CHECK(total > 0);
  CHECK(bonds > 0);
}

TEST_CASE("canonical form: relabel, mirror, cycle rotation") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    FalMap m = random_valid(rng);
    std::map<std::string, std::string> vn, cn;
    for (const auto& v : m.vertex_names()) vn[v] = "z" + std::to_string(rng() % 1000000) + v;
    for (const auto& k : m.knots()) cn[k.name] = "Q" + k.name;
    for (const auto& c : m.clasps()) cn[c.name] = "R" + c.name;
    FalMap r = relabel(m, vn, cn);
    CHECK(canonical_form(r) == canonical_form(m));
    CHECK(canonical_form(mirror(m)) == canonical_form(m));
    CHECK(mirror(mirror(m)) == m);
    CHECK(validate(mirror(m)).ok() == validate(m).ok());
    CHECK(incidence_multigraph(r) == incidence_multigraph(m));
    // A dart bijection exists and carries alpha to alpha.
    std::vector<int> iso = map_isomorphism(m, r);
    REQUIRE(iso.size() == static_cast<std::size_t>(m.dart_count()));
    for (int d = 0; d < m.dart_count(); ++d) CHECK(iso[m.alpha(d)] == r.alpha(iso[d]));
  }
  CHECK(canonical_form(chain_p(3)) != canonical_form(chain_p(4)));
  CHECK(canonical_form(mirror(borromean())) == canonical_form(borromean()));
}

TEST_CASE("incidence multigraph shapes") {
  // P3: knot circles and crossing circles alternate around a 6-cycle.
  FalMap p = chain_p(3);
  for (int c = 0; c < p.clasp_count(); ++c) CHECK_FALSE(p.is_self_clasp(c));
  // Borromean: every crossing circle links the single knot twice.
  FalMap b = borromean();
  for (int c = 0; c < b.clasp_count(); ++c) CHECK(b.is_self_clasp(c));
  CHECK(incidence_multigraph(b) != incidence_multigraph(p));
  Code ib = incidence_multigraph(b);
  REQUIRE(ib.size() >= 2);
  CHECK(ib[0] == 1);
  CHECK(ib[1] == 2);
  CHECK(ib.back() == 2);
}

TEST_CASE("every accepted map satisfies the Euler count") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    FalMap m = random_valid(rng);
    CHECK(m.vertex_count() - 3 * m.vertex_count() / 2 + m.face_count() == 2);
  }
}
