#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fal/families.hpp"
#include "fal/sepsets.hpp"
#include "oracles.hpp"

using namespace fal;

namespace {

std::vector<FalMap> fixtures() {
  std::vector<FalMap> out{borromean(), chain_p(3), chain_p(4), chain_o(3), figure14(), figure15()};
  for (int n = 2; n <= 6; ++n) out.push_back(pretzel(n));
  std::mt19937_64 rng(23);
  for (int i = 0; i < 15; ++i) out.push_back(random_signature(rng, 7));
  return out;
}

SignatureDecomposition fig15_sig(const FalMap& m) {
  auto s = decompose(m, m.find_knot("Kf"), false);
  REQUIRE(s.has_value());
  return *s;
}

std::vector<DiskTrace> disks_of(const SeparatingQuadruple& q) { return {q.d_i, q.d_j, q.d_ij, q.d_long}; }

// Strict partial order, and every quadruple that is not outermost lies
// under exactly one outermost quadruple.
void check_order(const InsideOrder& o, const StandardBall& b, std::size_t nq) {
  for (std::size_t a = 0; a < nq; ++a) {
    CHECK_FALSE(o.less(a, a));
    for (std::size_t c = 0; c < nq; ++c) {
      if (o.less(a, c)) CHECK_FALSE(o.less(c, a));
      for (std::size_t d = 0; d < nq; ++d)
        if (o.less(a, c) && o.less(c, d)) CHECK(o.less(a, d));
    }
  }
  for (std::size_t q = 0; q < nq; ++q) {
    if (std::find(b.outermost.begin(), b.outermost.end(), static_cast<int>(q)) != b.outermost.end()) continue;
    int containers = 0;
    for (int t : b.outermost) containers += o.less(q, t);
    CHECK(containers == 1);
  }
}

void check_ball(const FalMap& m, const SignatureDecomposition& s, const StandardBall& b) {
  CHECK(b.certificate_ok);
  CHECK(b.sphere_punctures.front() == s.k_f);
  std::set<ComponentRef> all{{ComponentKind::KnotCircle, s.k_f}};
  for (const auto& c : b.enclosed) {
    CHECK(b.excluded.count(c) == 0);
    all.insert(c);
  }
  all.insert(b.excluded.begin(), b.excluded.end());
  CHECK(all.size() == static_cast<std::size_t>(m.component_count()));
  // The ball's own curve is recomputed independently of the stored one.
  CHECK(two_point_curve(m, s.k_f, b.enclosed).has_value());
}

}  // namespace

TEST_CASE("separating pairs agree with the face-colouring oracle") {
  for (const FalMap& m : fixtures()) {
    auto pairs = separating_pairs(m);
    std::size_t expected = 0;
    for (int c = 0; c < m.clasp_count(); ++c) {
      auto d = crossing_disks(m, c);
      for (std::size_t a = 0; a < d.size(); ++a)
        for (std::size_t b = a + 1; b < d.size(); ++b) {
          bool sep = oracle::traces_separate(m, {d[a], d[b]});
          expected += sep;
          CHECK(separates(m, {d[a], d[b]}).value_or(false) == sep);
          bool listed = false;
          for (const auto& p : pairs)
            listed = listed || (p.first.same_trace(d[a]) && p.second.same_trace(d[b]));
          CHECK(listed == sep);
        }
    }
    CHECK(pairs.size() == expected);
    for (const auto& p : pairs) CHECK(p.shared_longitude == p.first.clasp);
  }
  CHECK(separating_pairs(borromean()).empty());
  CHECK(separating_pairs(figure15()).size() == 6);
}

TEST_CASE("a lone crossing disk never separates") {
  for (const FalMap& m : fixtures())
    for (const DiskTrace& t : all_crossing_disks(m)) {
      CHECK_FALSE(oracle::traces_separate(m, {t}));
      CHECK(separates(m, {t}) == std::optional<bool>(false));
    }
}

TEST_CASE("figure 15 quadruples") {
  FalMap m = figure15();
  auto s = fig15_sig(m);
  auto qs = separating_quadruples(m, s);
  REQUIRE(qs.size() == 5);
  std::vector<std::string> names;
  for (const auto& q : qs) names.push_back(m.clasps()[q.chord].name);
  CHECK(names == std::vector<std::string>{"C12", "C25", "C35", "C56", "C57"});
  for (const auto& q : qs) {
    CHECK(classify_disk(q.d_long.punctures) == DiskKind::LongitudinalDisk);
    CHECK(disjoint(m, disks_of(q)));
  }
  // Q12 and Q35 can be drawn together; Q12 and Q25 cannot.
  auto both = [&](int a, int b) {
    auto d = disks_of(qs[a]);
    auto e = disks_of(qs[b]);
    d.insert(d.end(), e.begin(), e.end());
    return disjoint(m, d);
  };
  CHECK(both(0, 2));
  CHECK_FALSE(both(0, 1));
}

TEST_CASE("figure 15 order and standard ball at alpha = 7") {
  FalMap m = figure15();
  auto s = fig15_sig(m);
  auto qs = separating_quadruples(m, s);
  InsideOrder o = inside_order(m, s, qs, 7);
  CHECK(o.relation == std::vector<std::array<int, 2>>{{2, 1}, {3, 4}});
  StandardBall b = standard_ball(m, s, qs, o);
  CHECK(b.outermost == std::vector<int>{0, 1, 4});
  CHECK(b.subsequence == std::vector<int>{0, 1, 4});
  std::vector<std::string> sp;
  for (int k : b.sphere_punctures) sp.push_back(m.knots()[k].name);
  CHECK(sp == std::vector<std::string>{"Kf", "K1", "K2", "K5", "K7"});
  CHECK(b.excluded.empty());
  check_ball(m, s, b);
}

TEST_CASE("figure 15 at every alpha") {
  FalMap m = figure15();
  auto s = fig15_sig(m);
  auto qs = separating_quadruples(m, s);
  for (int alpha = 1; alpha <= s.n(); ++alpha) {
    InsideOrder o = inside_order(m, s, qs, alpha);
    StandardBall b = standard_ball(m, s, qs, o);
    REQUIRE_FALSE(b.outermost.empty());
    check_order(o, b, qs.size());
    check_ball(m, s, b);
  }
  // alpha = 3 leaves K4 and C4 outside the ball.
  StandardBall b3 = standard_ball(m, s, qs, inside_order(m, s, qs, 3));
  CHECK(b3.excluded.size() == 2);
  CHECK(b3.excluded.count({ComponentKind::KnotCircle, m.find_knot("K4")}) == 1);
}

TEST_CASE("alpha positions") {
  CHECK(alpha_position(7, 7, 1) == 1);
  CHECK(alpha_position(7, 1, 2) == 1);
  CHECK(alpha_position(7, 1, 1) == 7);
  CHECK(alpha_position(5, 3, 3) == 5);
}

TEST_CASE("single chord with n = 2") {
  FalMap m = pretzel(2);
  auto sigs = detect_signature(m);
  REQUIRE_FALSE(sigs.empty());
  auto qs = separating_quadruples(m, sigs[0]);
  CHECK(qs.size() == 1);
  for (int alpha = 1; alpha <= 2; ++alpha) {
    InsideOrder o = inside_order(m, sigs[0], qs, alpha);
    StandardBall b = standard_ball(m, sigs[0], qs, o);
    CHECK(b.outermost == std::vector<int>{0});
    check_ball(m, sigs[0], b);
  }
}

TEST_CASE("quadruple counts and balls on signature links") {
  FalMap p4 = pretzel(4);
  CHECK(separating_quadruples(p4, detect_signature(p4)[0]).size() == 3);
  std::vector<FalMap> ms{figure14()};
  for (int n = 3; n <= 6; ++n) ms.push_back(pretzel(n));
  std::mt19937_64 rng(29);
  for (int i = 0; i < 12; ++i) ms.push_back(random_signature(rng, 7));
  for (const FalMap& m : ms) {
    for (const auto& s : detect_signature(m)) {
      auto qs = separating_quadruples(m, s);
      CHECK(qs.size() == s.chords.size());
      for (int alpha = 1; alpha <= s.n(); ++alpha) {
        InsideOrder o = inside_order(m, s, qs, alpha);
        StandardBall b = standard_ball(m, s, qs, o);
        check_order(o, b, qs.size());
        check_ball(m, s, b);
        // Intervals of outermost quadruples are nested-or-disjoint.
        for (int x : b.outermost)
          for (int y : b.outermost)
            if (x != y) CHECK((o.interval[x][1] <= o.interval[y][0] || o.interval[y][1] <= o.interval[x][0]));
      }
    }
  }
}
