#include <gtest/gtest.h>

#include <set>

#include "apll/abelian_group.hpp"
#include "apll/number_theory.hpp"

using namespace apll;

TEST(AbelianGroup, ParseAndFormat) {
  EXPECT_EQ(GroupSpec::parse("C14").factors(), std::vector<std::int64_t>{14});
  EXPECT_EQ(GroupSpec::parse("C2xC7xC49").factors(), (std::vector<std::int64_t>{2, 7, 49}));
  EXPECT_EQ(GroupSpec::parse("C2*C343").to_string(), "C2xC343");
  EXPECT_EQ(GroupSpec::parse("C1").order(), 1);
  EXPECT_THROW(GroupSpec::parse("D14"), std::invalid_argument);
  EXPECT_THROW(GroupSpec({1, 3}), std::invalid_argument);

  const GroupSpec g = GroupSpec::parse("C2xC343");
  EXPECT_EQ(g.format_element(g.make({1, 0})), "1,0");
  EXPECT_EQ(g.parse_element("1,-1"), g.make({1, 342}));
  EXPECT_EQ(g.element_at(g.index_of(g.make({1, 5}))), g.make({1, 5}));
}

TEST(AbelianGroup, ElementArithmeticInC14) {
  const GroupSpec g = GroupSpec::cyclic(14);
  EXPECT_EQ(power(g, g.make({1}), 2), g.make({2}));
  EXPECT_EQ(inverse(g, g.make({3})), g.make({11}));
  EXPECT_EQ(element_order(g, g.make({7})), 2);
  EXPECT_EQ(power(g, g.make({3}), -1), g.make({11}));
  EXPECT_EQ(op(g, g.make({9}), g.make({8})), g.make({3}));
}

TEST(AbelianGroup, UniqueInvolution) {
  EXPECT_EQ(unique_involution(GroupSpec::cyclic(6)), GroupSpec::cyclic(6).make({3}));
  EXPECT_EQ(unique_involution(GroupSpec::cyclic(14)), GroupSpec::cyclic(14).make({7}));
  const GroupSpec g = GroupSpec::parse("C2xC343");
  EXPECT_EQ(unique_involution(g), g.make({1, 0}));
  EXPECT_THROW(unique_involution(GroupSpec::cyclic(7)), std::domain_error);
  EXPECT_THROW(unique_involution(GroupSpec::cyclic(12)), std::domain_error);
  EXPECT_THROW(unique_involution(GroupSpec::parse("C2xC2xC3")), std::domain_error);
}

TEST(AbelianGroup, Index2Subgroup) {
  const auto e14 = index2_subgroup(GroupSpec::cyclic(14));
  EXPECT_EQ(e14.child(), GroupSpec::cyclic(7));
  EXPECT_EQ(e14.inject(e14.child().make({1})), GroupSpec::cyclic(14).make({2}));
  EXPECT_EQ(index2_subgroup(GroupSpec::cyclic(6)).child(), GroupSpec::cyclic(3));
  const auto e686 = index2_subgroup(GroupSpec::parse("C2xC343"));
  EXPECT_EQ(e686.child(), GroupSpec::cyclic(343));
  EXPECT_EQ(e686.inject(e686.child().make({5})), e686.parent().make({0, 5}));
  EXPECT_FALSE(e686.project(e686.parent().make({1, 5})).has_value());
}

TEST(AbelianGroup, PowerAutomorphisms) {
  EXPECT_EQ(power_automorphisms(GroupSpec::cyclic(14)), (std::vector<std::int64_t>{1, 3, 5, 9, 11, 13}));
  EXPECT_EQ(power_automorphisms(GroupSpec::cyclic(7)), (std::vector<std::int64_t>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(power_automorphisms(GroupSpec::parse("C2xC7xC7")), power_automorphisms(GroupSpec::cyclic(14)));
}

TEST(AbelianGroup, Enumeration) {
  auto names = [](std::int64_t m) {
    std::vector<std::string> out;
    for (const auto& g : enumerate_abelian_groups(m)) out.push_back(g.to_string());
    return out;
  };
  EXPECT_EQ(names(14), std::vector<std::string>{"C14"});
  EXPECT_EQ(names(6), std::vector<std::string>{"C6"});
  EXPECT_EQ(names(686), (std::vector<std::string>{"C2xC343", "C2xC7xC49", "C2xC7xC7xC7"}));
  EXPECT_THROW(enumerate_abelian_groups(0), std::out_of_range);
  EXPECT_THROW(enumerate_abelian_groups((std::int64_t{1} << 48) + 1), std::out_of_range);

  for (std::int64_t m : {1, 8, 72, 360, 1024, 2 * 3 * 3 * 5 * 5 * 5, 5292}) {
    std::uint64_t expected = 1;
    for (const auto& [p, e] : nt::factorize(static_cast<std::uint64_t>(m))) expected *= nt::partition_count(e);
    const auto groups = enumerate_abelian_groups(m);
    EXPECT_EQ(groups.size(), expected) << m;
    for (const auto& g : groups) EXPECT_EQ(g.order(), m);
  }
}

// Exhaustive structural checks on every abelian group of order 2m, m odd,
// up to 10^4 elements in total per order.
TEST(AbelianGroup, InvolutionSquaresAndPowerBijections) {
  for (std::int64_t m : {3, 7, 13, 21, 27, 31, 43, 45, 57, 63, 73, 75, 343, 625, 1323}) {
    for (const auto& g : enumerate_abelian_groups(2 * m)) {
      const auto elems = g.elements();
      const GroupElement f = unique_involution(g);
      const auto emb = index2_subgroup(g);
      std::set<GroupElement> squares, image;
      for (const auto& x : elems) {
        const bool invol = x != g.identity() && op(g, x, x) == g.identity();
        EXPECT_EQ(invol, x == f);
        squares.insert(power(g, x, 2));
      }
      for (const auto& y : emb.child().elements()) {
        const GroupElement x = emb.inject(y);
        image.insert(x);
        EXPECT_EQ(emb.project(x), y);
        for (const auto& z : std::vector<GroupElement>{emb.child().identity(), y}) {
          EXPECT_EQ(emb.inject(op(emb.child(), y, z)), op(g, x, emb.inject(z)));
        }
      }
      EXPECT_EQ(image, squares) << g.to_string();
      EXPECT_EQ(static_cast<std::int64_t>(image.size()), m);
      for (std::int64_t t : {5LL, 7LL, 11LL, 13LL}) {
        if (nt::gcd(t, g.order()) != 1) continue;
        std::set<GroupElement> img;
        for (const auto& x : elems) img.insert(power(g, x, t));
        EXPECT_EQ(img.size(), elems.size());
      }
    }
  }
}
