#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "fal/classify.hpp"
#include "fal/families.hpp"
#include "fal/swap.hpp"
#include "oracles.hpp"

using namespace fal;

namespace {

std::vector<FalMap> fixtures() {
  std::vector<FalMap> out{chain_p(3), figure14()};
  for (int n = 2; n <= 6; ++n) out.push_back(pretzel(n));
  std::mt19937_64 rng(31);
  for (int i = 0; i < 25; ++i) out.push_back(random_signature(rng, 8));
  return out;
}

std::set<std::string> component_names(const FalMap& m) {
  std::set<std::string> s;
  for (const auto& k : m.knots()) s.insert(k.name);
  for (const auto& c : m.clasps()) s.insert(c.name);
  return s;
}

}  // namespace

TEST_CASE("flype keeps the map valid and its incidence structure") {
  int flypes = 0;
  for (const FalMap& m : fixtures()) {
    for (int c = 0; c < m.clasp_count(); ++c) {
      auto d = crossing_disks(m, c);
      for (std::size_t a = 1; a < d.size(); ++a) {
        FalMap f = flype(m, c, d[a]);
        ++flypes;
        CHECK(validate(f).ok());
        CHECK(f.component_count() == m.component_count());
        CHECK(component_names(f) == component_names(m));
        CHECK(incidence_multigraph(f) == incidence_multigraph(m));
        CHECK(reflection_class(f) == reflection_class(m));
        CHECK(f.clasps()[f.find_clasp(m.clasps()[c].name)].verts.size() == 2);
        RewriteStep st;
        st.kind = RewriteKind::Flype;
        st.clasp = m.clasps()[c].name;
        st.alternate = static_cast<int>(a);
        CHECK(apply(m, st) == f);
        // Some alternate of the result moves the clasp back.
        int fc = f.find_clasp(m.clasps()[c].name);
        bool back = false;
        auto fd = crossing_disks(f, fc);
        for (std::size_t b = 1; b < fd.size() && !back; ++b) back = flype(f, fc, fd[b]) == m;
        CHECK(back);
      }
    }
  }
  CHECK(flypes > 30);
}

TEST_CASE("flype alternate counts on fixtures") {
  auto count = [](const FalMap& m) {
    int n = 0;
    for (int c = 0; c < m.clasp_count(); ++c) n += static_cast<int>(crossing_disks(m, c).size()) - 1;
    return n;
  };
  CHECK(count(pretzel(3)) == 1);
  CHECK(count(pretzel(5)) == 3);
  CHECK(count(figure14()) == 2);
  CHECK(count(figure15()) == 6);
}

TEST_CASE("flype rejects traces that are not alternates") {
  FalMap m = pretzel(4);
  int c = -1;
  for (int k = 0; k < m.clasp_count() && c < 0; ++k)
    if (crossing_disks(m, k).size() > 1) c = k;
  REQUIRE(c >= 0);
  auto d = crossing_disks(m, c);
  CHECK_THROWS_AS(flype(m, c, d[0]), NotAnAlternate);
  const int other = (c + 1) % m.clasp_count();
  CHECK_THROWS_AS(flype(m, other, d[1]), NotAnAlternate);
  RewriteStep st;
  st.kind = RewriteKind::Flype;
  st.clasp = m.clasps()[c].name;
  st.alternate = static_cast<int>(d.size());
  CHECK_THROWS(apply(m, st));
}

TEST_CASE("full swap on P3 is a fixed point") {
  FalMap p3 = chain_p(3);
  for (const auto& s : detect_signature(p3)) {
    auto [r, step] = full_swap(p3, s);
    CHECK(canonical_form(r) == canonical_form(p3));
    CHECK(step.slope_swapped.size() == 4);
    CHECK(step.kind == RewriteKind::FullSwap);
    CHECK(step.k_f == p3.knots()[s.k_f].name);
  }
}

TEST_CASE("full swap preserves the canonical form and exchanges pair names") {
  for (const FalMap& m : fixtures()) {
    for (int k = 0; k < m.knot_count(); ++k) {
      auto s = decompose(m, k, false);
      if (!s) continue;
      auto [r, step] = full_swap(m, *s);
      CHECK(validate(r).ok());
      CHECK(canonical_form(r) == canonical_form(m));
      CHECK(step.slope_swapped.size() == static_cast<std::size_t>(2 * s->n()));
      for (const SignaturePair& p : s->pairs) {
        const std::string kn = m.knots()[p.knot].name, cn = m.clasps()[p.clasp].name;
        CHECK(step.rename.at(kn) == cn);
        CHECK(step.rename.at(cn) == kn);
        CHECK(r.find_clasp(kn) >= 0);
        CHECK(r.find_knot(cn) >= 0);
      }
      CHECK(apply(m, step) == r);
      // The swapped map decomposes on the same K_f, with the same chords.
      auto s2 = decompose(r, r.find_knot(step.k_f), false);
      REQUIRE(s2.has_value());
      CHECK(s2->chords.size() == s->chords.size());
      auto [rr, step2] = full_swap(r, *s2);
      CHECK(canonical_form(rr) == canonical_form(m));
      CHECK(component_names(rr) == component_names(m));
    }
  }
}

TEST_CASE("mirror and relabel steps replay") {
  FalMap m = figure14();
  RewriteStep st;
  st.kind = RewriteKind::Mirror;
  CHECK(apply(m, st) == mirror(m));
  CHECK(std::string(to_string(RewriteKind::Flype)) == "Flype");
  CHECK(std::string(to_string(RewriteKind::FullSwap)) == "FullSwap");
}
