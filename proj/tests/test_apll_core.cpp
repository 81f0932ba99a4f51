#include <gtest/gtest.h>

#include <algorithm>

#include "apll/apll_core.hpp"
#include "apll/errors.hpp"
#include "naive_oracle.hpp"

using namespace apll;

namespace {

template <typename Int>
std::vector<GroupElement> cyc(const GroupSpec& g, const std::vector<Int>& xs) {
  std::vector<GroupElement> out;
  for (auto x : xs) out.push_back(g.make({static_cast<std::int64_t>(x)}));
  return out;
}

std::vector<GroupElement> cyc(const GroupSpec& g, std::initializer_list<std::int64_t> xs) {
  return cyc(g, std::vector<std::int64_t>(xs));
}

CodeCandidate code(std::int64_t order, int n, std::vector<std::int64_t> xs) {
  const GroupSpec g = GroupSpec::cyclic(order);
  return make_code_candidate(g, n, cyc(g, std::move(xs)));
}

SplitCandidate split(std::int64_t order, int n, std::vector<std::int64_t> t0, std::vector<std::int64_t> t1) {
  const GroupSpec h = GroupSpec::cyclic(order);
  return make_split_candidate(h, n, cyc(h, std::move(t0)), cyc(h, std::move(t1)));
}

SplitCandidate fixture_n2() { return split(7, 2, {0, 1, 6}, {2, 5}); }
SplitCandidate fixture_n1() { return split(3, 1, {0}, {1, 2}); }

SplitCandidate relabel(const SplitCandidate& s, std::int64_t t) {
  std::vector<GroupElement> a, b;
  for (const auto& x : s.t0) a.push_back(power(s.subgroup, x, t));
  for (const auto& x : s.t1) b.push_back(power(s.subgroup, x, t));
  return make_split_candidate(s.subgroup, s.n, a, b);
}

std::vector<std::int64_t> residues(const std::vector<GroupElement>& xs) {
  std::vector<std::int64_t> out;
  for (const auto& x : xs) out.push_back(x.exponents.at(0));
  return out;
}

}  // namespace

TEST(ApllCore, VerifyCodeFixtures) {
  EXPECT_TRUE(verify_code(code(14, 2, {0, 2, 12, 3, 11})).holds);
  EXPECT_TRUE(verify_code(code(14, 2, {0, 1, 13, 4, 10})).holds);
  EXPECT_TRUE(verify_code(code(6, 1, {0, 1, 5})).holds);
  EXPECT_FALSE(verify_code(code(6, 1, {0, 2, 4})).holds);
}

TEST(ApllCore, VerifyCodeWitnessIsFirstMismatch) {
  const CodeCandidate c = code(14, 2, {0, 1, 13, 2, 12});
  const Verdict v = verify_code(c);
  ASSERT_FALSE(v.holds);
  ASSERT_TRUE(v.witness.has_value());
  // T^2 has coefficient 4 at g (0+1, 1+0, 2+13, 13+2) while the right side is 2.
  EXPECT_EQ(v.witness->element, c.group.make({1}));
  EXPECT_EQ(v.witness->lhs, 4);
  EXPECT_EQ(v.witness->rhs, 2);

  // The coefficients at g^2 also disagree (3 against 1).
  const RingElement t = RingElement::from_set(c.group, c.elements);
  EXPECT_EQ((t * t).coefficient(c.group.make({2})), 3);
  EXPECT_EQ(2 - power_op(t, 2).coefficient(c.group.make({2})), 1);
}

TEST(ApllCore, MalformedCandidatesAreErrors) {
  const GroupSpec g = GroupSpec::cyclic(14);
  EXPECT_THROW(make_code_candidate(g, 2, cyc(g, {0, 1, 13, 2})), malformed_candidate);
  EXPECT_THROW(make_code_candidate(g, 2, cyc(g, {0, 1, 13, 2, 3})), malformed_candidate);
  EXPECT_THROW(make_code_candidate(g, 2, cyc(g, {1, 13, 2, 12, 7})), malformed_candidate);
  EXPECT_THROW(make_code_candidate(GroupSpec::cyclic(12), 2, cyc(GroupSpec::cyclic(12), {0, 1, 11, 2, 10})),
               malformed_candidate);
  EXPECT_THROW(make_split_candidate(GroupSpec::cyclic(7), 2, cyc(GroupSpec::cyclic(7), {0, 1, 3}),
                                    cyc(GroupSpec::cyclic(7), {2, 5})),
               malformed_candidate);
  EXPECT_THROW(make_split_candidate(GroupSpec::cyclic(7), 2, cyc(GroupSpec::cyclic(7), {0, 1, 6}),
                                    cyc(GroupSpec::cyclic(7), {1, 6})),
               malformed_candidate);
}

TEST(ApllCore, SplitCodeFixtures) {
  const SplitCandidate s14 = split_code(code(14, 2, {0, 2, 3, 11, 12}));
  EXPECT_EQ(s14.subgroup, GroupSpec::cyclic(7));
  EXPECT_EQ(residues(s14.t0), (std::vector<std::int64_t>{0, 1, 6}));
  EXPECT_EQ(residues(s14.t1), (std::vector<std::int64_t>{2, 5}));

  const SplitCandidate s6 = split_code(code(6, 1, {0, 1, 5}));
  EXPECT_EQ(residues(s6.t0), (std::vector<std::int64_t>{0}));
  EXPECT_EQ(residues(s6.t1), (std::vector<std::int64_t>{1, 2}));

  for (const auto& c : {code(14, 2, {0, 2, 3, 11, 12}), code(6, 1, {0, 1, 5}), code(26, 3, {0, 1, 25, 4, 22, 6, 20})}) {
    const CodeCandidate back = join_split(c.group, split_code(c));
    EXPECT_EQ(back.elements, c.elements);
    EXPECT_EQ(split_code(c).t0.size() + split_code(c).t1.size(), c.elements.size());
  }
}

TEST(ApllCore, SplitOfCodeWithXAndFx) {
  // 1 and f*1 = 8 are both in T, so T0 and T1 overlap.
  const CodeCandidate c = code(14, 2, {0, 1, 13, 6, 8});
  const SplitCandidate s = split_code(c);
  EXPECT_EQ(residues(s.t0), (std::vector<std::int64_t>{0, 3, 4}));
  EXPECT_EQ(residues(s.t1), (std::vector<std::int64_t>{3, 4}));
  EXPECT_THROW(validate(s), malformed_candidate);
  const SplitVerdict v = verify_split(s);
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.product.witness);
  EXPECT_EQ(v.product.witness->element, s.subgroup.identity());
  EXPECT_EQ(v.product.witness->lhs, 2);
  EXPECT_FALSE(verify_code(c).holds);
  EXPECT_EQ(join_split(c.group, s).elements, c.elements);
  EXPECT_FALSE(analyze(s).verified);
}

TEST(ApllCore, VerifySplitFixtures) {
  EXPECT_TRUE(verify_split(fixture_n2()).holds);
  EXPECT_TRUE(verify_split(fixture_n1()).holds);

  const SplitVerdict bad = verify_split(split(7, 2, {0, 1, 6}, {3, 4}));
  EXPECT_FALSE(bad.holds);
  EXPECT_FALSE(bad.product.holds);
  ASSERT_TRUE(bad.product.witness);
  // T0 T1 = {2,3,3,4,4,5}: e matches, g is missing.
  EXPECT_EQ(bad.product.witness->element, GroupSpec::cyclic(7).make({1}));
  EXPECT_EQ(bad.product.witness->lhs, 0);
  EXPECT_EQ(bad.product.witness->rhs, 1);
  const RingElement t0 = RingElement::from_set(GroupSpec::cyclic(7), cyc(GroupSpec::cyclic(7), {0, 1, 6}));
  const RingElement t1 = RingElement::from_set(GroupSpec::cyclic(7), cyc(GroupSpec::cyclic(7), {3, 4}));
  EXPECT_EQ((t0 * t1).coefficient(GroupSpec::cyclic(7).make({3})), 2);
}

TEST(ApllCore, BatteryOnFixturesAndMutations) {
  EXPECT_TRUE(necessary_battery(fixture_n2()).all());
  EXPECT_TRUE(necessary_battery(fixture_n1()).all());

  // Overlapping pair: only membership is required by the battery.
  const GroupSpec h = GroupSpec::cyclic(7);
  const SplitCandidate overlap{h, 2, cyc(h, {0, 1, 6}), cyc(h, {1, 5})};
  const BatteryReport r = necessary_battery(overlap);
  EXPECT_FALSE(r.passed[1]);
  EXPECT_EQ(r.first_failure(), 1);

  const SplitCandidate mutated{h, 2, cyc(h, {0, 1, 3}), cyc(h, {2, 5})};
  EXPECT_THROW(validate(mutated), malformed_candidate);
  EXPECT_FALSE(necessary_battery(mutated).all());

  const SplitCandidate wrong_sizes{h, 2, cyc(h, {0}), cyc(h, {1, 6, 2, 5})};
  const BatteryReport ws = necessary_battery(wrong_sizes);
  EXPECT_FALSE(ws.passed[5]);
  EXPECT_TRUE(ws.passed[4]);
}

TEST(ApllCore, MultiplicityPartitionN2) {
  const MultiplicityPartition x = multiplicity_partition(fixture_n2(), Side::X);
  EXPECT_EQ(x.multiplicity, (std::vector<std::int64_t>{1, 2, 2, 3, 3, 2, 2}));
  EXPECT_EQ(x.sizes, (std::map<int, std::int64_t>{{0, 0}, {1, 1}, {2, 4}, {3, 2}}));
  EXPECT_EQ(x.max_multiplicity, 3);
  EXPECT_EQ(x.weighted_mass, 15);
  EXPECT_TRUE(x.mass_identities_hold);

  const MultiplicityPartition y = multiplicity_partition(fixture_n2(), Side::Y);
  EXPECT_EQ(y.multiplicity, (std::vector<std::int64_t>{2, 1, 2, 1, 1, 2, 1}));
  EXPECT_EQ(y.sizes, (std::map<int, std::int64_t>{{0, 0}, {1, 4}, {2, 3}}));
  EXPECT_EQ(y.weighted_mass, 10);
  EXPECT_TRUE(y.mass_identities_hold);

  const MultiplicityPartition x1 = multiplicity_partition(fixture_n1(), Side::X);
  EXPECT_EQ(x1.weighted_mass, 3);
  EXPECT_TRUE(x1.mass_identities_hold);
}

TEST(ApllCore, ThetasOnFixtures) {
  const Thetas t = compute_thetas(fixture_n2());
  EXPECT_EQ(t.theta0, 2);
  EXPECT_EQ(t.theta11, 0);
  EXPECT_EQ(t.theta12, 2);
  EXPECT_EQ(t.theta1, 1);
  EXPECT_TRUE(t.sum_identity_holds);
  EXPECT_FALSE(t.diagnostic_only);

  const Thetas t1 = compute_thetas(fixture_n1());
  EXPECT_EQ(t1.theta0 + t1.theta11 + t1.theta12, 2);
  EXPECT_TRUE(t1.sum_identity_holds);

  for (std::int64_t k : {2, 3, 4, 5, 6}) {
    const Thetas r = compute_thetas(relabel(fixture_n2(), k));
    EXPECT_EQ(r.theta0, t.theta0);
    EXPECT_EQ(r.theta11, t.theta11);
    EXPECT_EQ(r.theta12, t.theta12);
  }
}

TEST(ApllCore, PairCountsN2) {
  EXPECT_EQ(residues(translate_sequence(fixture_n2())), (std::vector<std::int64_t>{0, 2, 5, 3, 4}));
  const PairCounts c0 = pair_intersection_counts(fixture_n2(), 0);
  EXPECT_EQ(c0.counts, (std::array<std::int64_t, 3>{3, 4, 3}));
  EXPECT_EQ(c0.formula_c1_twice, 8);
  EXPECT_EQ(c0.formula_c2_twice, 6);
  EXPECT_TRUE(c0.formulas_hold);

  const PairCounts c1 = pair_intersection_counts(fixture_n2(), 1);
  EXPECT_EQ(c1.counts, (std::array<std::int64_t, 3>{7, 3, 0}));
  EXPECT_EQ(c1.formula_c1_twice, 6);
  EXPECT_EQ(c1.formula_c2_twice, 0);
  EXPECT_TRUE(c1.formulas_hold);
}

TEST(ApllCore, PairCountsN1) {
  const PairCounts c0 = pair_intersection_counts(fixture_n1(), 0);
  EXPECT_EQ(c0.counts, (std::array<std::int64_t, 3>{3, 0, 0}));
  EXPECT_TRUE(c0.formulas_hold);
  const PairCounts c1 = pair_intersection_counts(fixture_n1(), 1);
  EXPECT_EQ(c1.counts[1], 3);
  EXPECT_TRUE(c1.formulas_hold);
}

// Pair-intersection counts do not depend on how the translates are ordered.
TEST(ApllCore, PairCountsAreOrderIndependent) {
  const SplitCandidate s = fixture_n2();
  const GroupSpec& h = s.subgroup;
  std::vector<GroupElement> a = translate_sequence(s);
  std::sort(a.begin(), a.end());
  std::array<std::int64_t, 3> base{};
  bool first = true;
  do {
    std::array<std::int64_t, 3> counts{};
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        int m = 0;
        for (const auto& x : s.t0) {
          for (const auto& y : s.t0) m += op(h, a[i], x) == op(h, a[j], y);
        }
        ++counts[static_cast<std::size_t>(m)];
      }
    }
    if (first) base = counts;
    first = false;
    EXPECT_EQ(counts, base);
  } while (std::next_permutation(a.begin(), a.end()));
  EXPECT_EQ(base, pair_intersection_counts(s, 0).counts);
}

TEST(ApllCore, InclusionExclusionAndTripleProduct) {
  for (const auto& s : {fixture_n1(), fixture_n2(), relabel(fixture_n2(), 3)}) {
    const InclusionExclusion ie = inclusion_exclusion_check(s);
    EXPECT_TRUE(ie.holds());
    const TripleProduct tp = triple_product_check(s);
    EXPECT_TRUE(tp.holds());
  }
  const InclusionExclusion ie = inclusion_exclusion_check(fixture_n2());
  EXPECT_EQ(ie.x_lhs, 7);
  EXPECT_EQ(ie.x_rhs, 7);
  EXPECT_EQ(ie.y_lhs, 7);
  EXPECT_EQ(ie.y_rhs, 7);
}

TEST(ApllCore, DiagnosticOnlyOnUnverifiedInput) {
  const SplitCandidate bad = split(7, 2, {0, 1, 6}, {3, 4});
  const Thetas t = compute_thetas(bad);
  EXPECT_TRUE(t.diagnostic_only);
  EXPECT_FALSE(t.sum_identity_holds);
  const PairCounts c = pair_intersection_counts(bad, 0);
  EXPECT_TRUE(c.diagnostic_only);
  EXPECT_FALSE(c.formulas_hold);
  const InclusionExclusion ie = inclusion_exclusion_check(bad);
  EXPECT_TRUE(ie.diagnostic_only);
  // The raw inclusion-exclusion count holds for any family of translates.
  EXPECT_TRUE(ie.x_raw);
  EXPECT_TRUE(ie.y_raw);
  EXPECT_TRUE(triple_product_check(bad).diagnostic_only);
  const AnalysisReport r = analyze(bad);
  EXPECT_FALSE(r.verified);
}

TEST(ApllCore, Order3ReportOnSyntheticPair) {
  // H = C21, n = 4; 7 has order 3, so e, 7 and 14 all cube to e.
  const SplitCandidate s = split(21, 4, {0, 1, 20, 7, 14}, {2, 19, 5, 16});
  EXPECT_FALSE(verify_split(s).holds);
  const Order3Report rep = order3_repetition_report(s);
  EXPECT_FALSE(rep.precondition_met);
  EXPECT_EQ(rep.identity_multiplicity_t0, 3);
  EXPECT_EQ(rep.max_multiplicity[0], 3);
  EXPECT_NE(std::find(rep.violations.begin(), rep.violations.end(), "identity_not_once_in_t0_cubes"),
            rep.violations.end());
  EXPECT_NE(std::find(rep.violations.begin(), rep.violations.end(), "t0_cube_multiplicity_above_2"),
            rep.violations.end());
  for (std::size_t j = 0; j < 2; ++j) {
    std::int64_t total = 0;
    for (const auto& [idx, m] : rep.cube_histogram[j]) total += m;
    EXPECT_EQ(total, static_cast<std::int64_t>(j == 0 ? s.t0.size() : s.t1.size()));
  }

  // 2 and 9 differ by 7 and share a cube; so do their inverses.
  const SplitCandidate twice = split(21, 4, {0, 1, 20, 3, 18}, {2, 19, 9, 12});
  const Order3Report r2 = order3_repetition_report(twice);
  EXPECT_EQ(r2.repeated[1].size(), 2u);
  EXPECT_EQ(r2.identity_multiplicity_t0, 1);
  EXPECT_TRUE(analyze(twice).order3.has_value());
}

TEST(ApllCore, PartitionParityOnFixtures) {
  for (const auto& s : {fixture_n1(), fixture_n2(), relabel(fixture_n2(), 2), relabel(fixture_n2(), 3)}) {
    const AnalysisReport r = analyze(s);
    EXPECT_TRUE(r.verified);
    EXPECT_TRUE(r.e_in_x1);
    EXPECT_TRUE(r.x_parity_pattern);
    std::int64_t total_x = 0, total_y = 0;
    for (const auto& [i, v] : r.x.sizes) total_x += v;
    for (const auto& [i, v] : r.y.sizes) total_y += v;
    EXPECT_EQ(total_x, s.subgroup.order());
    EXPECT_EQ(total_y, s.subgroup.order());
  }
  const AnalysisReport r = analyze(fixture_n2());
  EXPECT_EQ(r.ell0, 0);  // T0^(3) = {0,3,4}
  EXPECT_EQ(r.ell1, 2);  // T1^(3) = {1,6}
}

// Every candidate at n <= 3: the library agrees with the dense oracle, and the
// code identity holds exactly when the split identities do.
TEST(ApllCore, CodeAndSplitIdentitiesAreEquivalent) {
  for (int n = 1; n <= 3; ++n) {
    const std::int64_t order = 2 * (n * n + n + 1);
    const GroupSpec g = GroupSpec::cyclic(order);
    int solutions = 0;
    for (const auto& t : naive::all_code_candidates(n)) {
      const CodeCandidate c = make_code_candidate(g, n, cyc(g, t));
      const bool direct = verify_code(c).holds;
      EXPECT_EQ(direct, naive::code_identity(t, n));
      const SplitCandidate s = split_code(c);
      EXPECT_EQ(direct, verify_split(s).holds);
      if (direct) {
        ++solutions;
        EXPECT_TRUE(necessary_battery(s).all());
      }
    }
    EXPECT_EQ(solutions, n == 1 ? 1 : n == 2 ? 3 : 0);
  }
}
