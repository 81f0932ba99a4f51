#include <gtest/gtest.h>

#include <set>

#include "apll/search.hpp"
#include "naive_oracle.hpp"

using namespace apll;

namespace {

std::vector<std::int64_t> residues(const std::vector<GroupElement>& xs) {
  std::vector<std::int64_t> out;
  for (const auto& x : xs) out.push_back(x.exponents.at(0));
  return out;
}

std::vector<std::vector<std::int64_t>> all_residues(const std::vector<CodeCandidate>& cs) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& c : cs) out.push_back(residues(c.elements));
  return out;
}

CodeCandidate code(std::int64_t order, int n, std::vector<std::int64_t> xs) {
  const GroupSpec g = GroupSpec::cyclic(order);
  std::vector<GroupElement> el;
  for (auto x : xs) el.push_back(g.make({x}));
  return make_code_candidate(g, n, el);
}

SearchConfig config(int n) {
  SearchConfig cfg;
  cfg.n = n;
  return cfg;
}

}  // namespace

TEST(Search, SmallDimensions) {
  const auto r1 = search_codes(config(1));
  ASSERT_EQ(r1.size(), 1u);
  EXPECT_EQ(all_residues(r1[0].solutions), (std::vector<std::vector<std::int64_t>>{{0, 1, 5}}));
  EXPECT_EQ(r1[0].orbit_representatives.size(), 1u);

  const auto r2 = search_codes(config(2));
  ASSERT_EQ(r2.size(), 1u);
  EXPECT_EQ(r2[0].group, GroupSpec::cyclic(14));
  EXPECT_EQ(all_residues(r2[0].solutions),
            (std::vector<std::vector<std::int64_t>>{{0, 1, 4, 10, 13}, {0, 2, 3, 11, 12}, {0, 5, 6, 8, 9}}));
  EXPECT_EQ(all_residues(r2[0].orbit_representatives), (std::vector<std::vector<std::int64_t>>{{0, 1, 4, 10, 13}}));
  EXPECT_TRUE(r2[0].orbit_dedup_applied);
  EXPECT_TRUE(r2[0].complete);

  for (int n : {3, 4}) {
    for (const auto& r : search_codes(config(n))) {
      EXPECT_TRUE(r.solutions.empty()) << n;
      EXPECT_TRUE(r.complete);
    }
  }
}

// Raw solution sets agree with exhaustive enumeration through the dense oracle.
TEST(Search, MatchesExhaustiveOracle) {
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::vector<std::int64_t>> expected;
    for (const auto& t : naive::all_code_candidates(n)) {
      if (naive::code_identity(t, n)) expected.emplace_back(t.begin(), t.end());
    }
    SearchConfig cfg = config(n);
    const auto r = search_codes(cfg);
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(all_residues(r[0].solutions), expected);
  }
}

TEST(Search, PruningDoesNotChangeSolutions) {
  for (int n = 1; n <= 3; ++n) {
    SearchConfig loose = config(n);
    loose.prune_partial = false;
    loose.prune_battery = false;
    const SearchResult a = search_codes(config(n))[0];
    const SearchResult b = search_codes(loose)[0];
    EXPECT_EQ(all_residues(a.solutions), all_residues(b.solutions));
    EXPECT_EQ(b.candidates_examined, naive::all_code_candidates(n).size());
    EXPECT_LE(a.nodes_visited, b.nodes_visited);
  }
  // n = 3: every one of the 220 candidates is examined without partial pruning.
  SearchConfig cfg = config(3);
  cfg.prune_partial = false;
  const SearchResult r = search_codes(cfg)[0];
  EXPECT_EQ(r.candidates_examined, 220u);
  EXPECT_EQ(r.battery_rejections + r.battery_passed_non_solutions, 220u);
  EXPECT_TRUE(r.solutions.empty());
}

TEST(Search, BatteryIsSoundOnSearchOutput) {
  for (int n = 1; n <= 5; ++n) {
    SearchConfig on = config(n), off = config(n);
    off.prune_battery = false;
    const auto a = search_codes(on);
    const auto b = search_codes(off);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(all_residues(a[i].solutions), all_residues(b[i].solutions));
      EXPECT_EQ(b[i].battery_rejections, 0u);
    }
  }
}

TEST(Search, ThreadCountDoesNotChangeResult) {
  for (int n : {2, 3, 5}) {
    std::vector<std::vector<std::vector<std::int64_t>>> sols;
    std::vector<std::uint64_t> examined;
    for (int threads : {1, 2, 8}) {
      SearchConfig cfg = config(n);
      cfg.thread_partitions = threads;
      const SearchResult r = search_codes(cfg)[0];
      sols.push_back(all_residues(r.solutions));
      examined.push_back(r.candidates_examined);
    }
    EXPECT_EQ(sols[0], sols[1]);
    EXPECT_EQ(sols[0], sols[2]);
    EXPECT_EQ(examined[0], examined[1]);
    EXPECT_EQ(examined[0], examined[2]);
  }
}

TEST(Search, OrbitRepresentatives) {
  const GroupSpec g = GroupSpec::cyclic(14);
  const CodeCandidate a = code(14, 2, {0, 2, 3, 11, 12});
  const OrbitRep rep = canonical_orbit_rep(g, a);
  EXPECT_TRUE(rep.dedup_applied);
  EXPECT_EQ(residues(rep.representative.elements), (std::vector<std::int64_t>{0, 1, 4, 10, 13}));
  EXPECT_EQ(residues(canonical_orbit_rep(g, code(14, 2, {0, 5, 6, 8, 9})).representative.elements),
            (std::vector<std::int64_t>{0, 1, 4, 10, 13}));

  // The three raw solutions form one orbit under x -> x^t.
  std::set<std::vector<std::int64_t>> orbit;
  for (std::int64_t t : power_automorphisms(g)) {
    std::vector<GroupElement> img;
    for (const auto& x : a.elements) img.push_back(power(g, x, t));
    orbit.insert(residues(make_code_candidate(g, 2, img).elements));
  }
  EXPECT_EQ(orbit.size(), 3u);

  const GroupSpec nc = GroupSpec::parse("C2xC7xC49");
  std::vector<GroupElement> el{nc.identity()};
  for (std::int64_t k = 1; k <= 18; ++k) {
    el.push_back(nc.make({0, 0, k}));
    el.push_back(nc.make({0, 0, 49 - k}));
  }
  const CodeCandidate c = make_code_candidate(nc, 18, el);
  const OrbitRep r = canonical_orbit_rep(nc, c);
  EXPECT_FALSE(r.dedup_applied);
  EXPECT_EQ(r.representative.elements, c.elements);
}

TEST(Search, SplitSearch) {
  const SplitSearchResult s2 = search_splits(GroupSpec::cyclic(7), 2, config(2));
  ASSERT_EQ(s2.solutions.size(), 3u);
  bool found = false;
  for (const auto& s : s2.solutions) {
    EXPECT_TRUE(verify_split(s).holds);
    if (residues(s.t0) == std::vector<std::int64_t>{0, 1, 6} && residues(s.t1) == std::vector<std::int64_t>{2, 5}) {
      found = true;
    }
  }
  EXPECT_TRUE(found);

  const SplitSearchResult s1 = search_splits(GroupSpec::cyclic(3), 1, config(1));
  ASSERT_EQ(s1.solutions.size(), 1u);
  EXPECT_EQ(residues(s1.solutions[0].t1), (std::vector<std::int64_t>{1, 2}));

  EXPECT_TRUE(search_splits(GroupSpec::cyclic(13), 3, config(3)).solutions.empty());
  EXPECT_THROW(search_splits(GroupSpec::cyclic(12), 3, config(3)), std::invalid_argument);
}

TEST(Search, BudgetMarksResultIncomplete) {
  SearchConfig cfg = config(5);
  cfg.max_candidates = 10;
  const SearchResult r = search_codes(cfg)[0];
  EXPECT_FALSE(r.complete);
  EXPECT_TRUE(r.solutions.empty());
}

TEST(Search, NonCyclicGroupWarns) {
  const GroupSpec g = GroupSpec::parse("C2xC7xC49");
  SearchConfig cfg = config(18);
  cfg.max_candidates = 1000;
  const SearchResult r = search_codes_in(g, cfg);
  EXPECT_FALSE(r.orbit_dedup_applied);
  EXPECT_FALSE(r.warnings.empty());
  EXPECT_FALSE(r.complete);
  EXPECT_THROW(search_codes_in(GroupSpec::cyclic(15), config(2)), std::invalid_argument);
}
