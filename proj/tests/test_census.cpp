#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "fal/census.hpp"
#include "fal/classify.hpp"
#include "fal/families.hpp"
#include "oracles.hpp"

using namespace fal;

namespace {

// Isomorphism classes of valid maps, by the backtracking oracle, bucketed
// by sorted knot lengths to keep comparisons few.
std::vector<FalMap> brute_force_classes(int clasps) {
  std::map<std::vector<std::size_t>, std::vector<FalMap>> reps;
  oracle::enumerate_labeled(clasps, [&](const FalMap& m) {
    if (!validate(m).ok()) return;
    std::vector<std::size_t> key;
    for (const auto& k : m.knots()) key.push_back(k.verts.size());
    std::sort(key.begin(), key.end());
    auto& bucket = reps[key];
    const DartMap dm = m.dart_map();
    for (const FalMap& r : bucket)
      if (oracle::isomorphic(r.dart_map(), dm)) return;
    bucket.push_back(m);
  });
  std::vector<FalMap> out;
  for (auto& [k, v] : reps) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace

TEST_CASE("nonseparable plane maps match the rooted counts") {
  auto maps = nonseparable_maps(9);
  REQUIRE(maps.size() == 10);
  const std::vector<std::size_t> unrooted{0, 0, 1, 2, 3, 6, 15, 36, 114, 396};
  for (int e = 2; e <= 9; ++e) {
    CHECK(maps[e].size() == unrooted[e]);
    CHECK(oracle::rooted_count(maps[e]) == oracle::tutte_nonseparable(e));
  }
  CHECK(oracle::tutte_nonseparable(2) == 1);
  CHECK(oracle::tutte_nonseparable(5) == 22);
  CHECK(oracle::tutte_nonseparable(9) == 9614);
}

TEST_CASE("medial construction") {
  auto maps = nonseparable_maps(4);
  for (int e = 2; e <= 4; ++e)
    for (const DartMap& h : maps[e])
      for (unsigned s = 0; s < (1u << e); ++s) {
        DartMap m = medial_fal(h, s);
        CHECK(m.size() == 6 * e);
        int clasp_darts = 0;
        for (int d = 0; d < m.size(); ++d) clasp_darts += m.label[d] == 1;
        CHECK(clasp_darts == 2 * e);
        CHECK(from_dart_map(m).knot_count() == medial_knot_count(h, s));
      }
}

TEST_CASE("census agrees with brute force up to four crossing circles") {
  auto cs = census({100, 4});
  for (int c = 2; c <= 4; ++c) {
    std::vector<FalMap> mine;
    for (const FalMap& m : cs)
      if (m.clasp_count() == c) mine.push_back(m);
    std::vector<FalMap> brute = brute_force_classes(c);
    CHECK(mine.size() == brute.size());
    for (const FalMap& b : brute) {
      int hits = 0;
      for (const FalMap& m : mine) hits += oracle::isomorphic(m.dart_map(), b.dart_map());
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("census ordering, validity and uniqueness") {
  CensusStats st;
  auto cs = census({8, 7}, &st);
  CHECK(st.valid >= cs.size());
  CHECK(st.candidates >= st.valid);
  std::set<Code> forms;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    CHECK(validate(cs[i]).ok());
    CHECK(cs[i].component_count() <= 8);
    CHECK(cs[i].clasp_count() <= 7);
    CHECK(forms.insert(canonical_form(cs[i])).second);
    if (i > 0) {
      auto key = [](const FalMap& m) { return std::make_pair(m.component_count(), canonical_form(m)); };
      CHECK(key(cs[i - 1]) < key(cs[i]));
    }
  }
}

TEST_CASE("multi-surface maps in the small census") {
  std::set<Code> multi;
  for (const FalMap& m : census({8, 9}))
    if (reflection_class(m).multiple()) multi.insert(canonical_form(m));
  std::set<Code> want{canonical_form(borromean()), canonical_form(chain_o(2)), canonical_form(chain_p(3)),
                      canonical_form(chain_o(3)), canonical_form(chain_p(4))};
  CHECK(multi == want);
}
