#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace apll {

/// Element of a finite abelian group written additively as a vector of
/// residues, one per cyclic factor. Ordering is lexicographic, which is the
/// canonical element order used by every set-valued output.
struct GroupElement {
  std::vector<std::int64_t> exponents;

  GroupElement() = default;
  explicit GroupElement(std::vector<std::int64_t> e) : exponents(std::move(e)) {}

  auto operator<=>(const GroupElement&) const = default;
  bool operator==(const GroupElement&) const = default;
};

/// A finite abelian group C_{d1} x ... x C_{dk}. The empty factor list is the
/// trivial group.
class GroupSpec {
 public:
  GroupSpec() = default;
  /// Every factor must be >= 2. Factors are kept in the given order.
  explicit GroupSpec(std::vector<std::int64_t> factors);

  static GroupSpec cyclic(std::int64_t m);
  /// Parses "C14", "C2xC7xC49" (also accepts "×" and "*"); "C1" is trivial.
  static GroupSpec parse(std::string_view literal);

  const std::vector<std::int64_t>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::int64_t order() const { return order_; }
  /// Least common multiple of the factors.
  std::int64_t exponent() const { return exponent_; }
  bool is_cyclic() const;

  std::string to_string() const;

  GroupElement identity() const;
  bool contains(const GroupElement& a) const;
  /// Builds an element, reducing each coordinate modulo its factor.
  GroupElement make(std::initializer_list<std::int64_t> exps) const;
  GroupElement make(const std::vector<std::int64_t>& exps) const;

  /// Mixed-radix index with the first factor most significant, so index
  /// order coincides with the canonical lexicographic element order.
  std::int64_t index_of(const GroupElement& a) const;
  GroupElement element_at(std::int64_t index) const;
  std::vector<GroupElement> elements() const;

  /// "7" in C14, "1,0" in C2xC343.
  std::string format_element(const GroupElement& a) const;
  GroupElement parse_element(std::string_view text) const;

  bool operator==(const GroupSpec& other) const { return factors_ == other.factors_; }

 private:
  std::vector<std::int64_t> factors_;
  std::int64_t order_ = 1;
  std::int64_t exponent_ = 1;
};

GroupElement op(const GroupSpec& g, const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupSpec& g, const GroupElement& a);
/// a^t written multiplicatively (t * a additively); negative t allowed.
GroupElement power(const GroupSpec& g, const GroupElement& a, std::int64_t t);
std::int64_t element_order(const GroupSpec& g, const GroupElement& a);

/// The unique element of order 2 in a group of order 2m with m odd.
/// Throws std::domain_error for odd orders or orders divisible by 4.
GroupElement unique_involution(const GroupSpec& g);

/// The index-2 subgroup H (the squares) of a group of order 2m, m odd,
/// presented as its own GroupSpec together with the embedding into G.
class SubgroupEmbedding {
 public:
  SubgroupEmbedding(GroupSpec parent, GroupSpec child, std::vector<int> parent_slot,
                    std::vector<std::int64_t> multiplier);

  const GroupSpec& parent() const { return parent_; }
  const GroupSpec& child() const { return child_; }

  GroupElement inject(const GroupElement& child_element) const;
  /// Inverse of inject on the image; nullopt for elements outside H.
  std::optional<GroupElement> project(const GroupElement& parent_element) const;

 private:
  GroupSpec parent_;
  GroupSpec child_;
  std::vector<int> parent_slot_;            // child factor i lives in parent factor slot[i]
  std::vector<std::int64_t> multiplier_;    // and is scaled by multiplier[i]
};

SubgroupEmbedding index2_subgroup(const GroupSpec& g);

/// All t in [1, exponent(G)) coprime to exponent(G); each x -> x^t is an
/// automorphism. For cyclic G these are all of Aut(G).
std::vector<std::int64_t> power_automorphisms(const GroupSpec& g);

/// One GroupSpec per isomorphism class of abelian groups of order m, in
/// canonical form: primes dividing m exactly once are merged into a single
/// leading cyclic factor, the remaining primes contribute elementary
/// divisors sorted by (prime, power). Deterministic order.
/// Requires 1 <= m <= 2^48.
std::vector<GroupSpec> enumerate_abelian_groups(std::int64_t m);

}  // namespace apll
