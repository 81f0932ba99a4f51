#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apll/abelian_group.hpp"
#include "apll/group_ring.hpp"

// Existence conditions for almost perfect linear Lee codes of packing radius
// 2, as executable predicates over a group G of order 2(n^2+n+1) and its
// index-2 subgroup H, plus the counting identities used in the analysis of
// the split pair (T0, T1).
namespace apll {

/// Inverse-closed T in G with e in T and |T| = 2n+1. Elements are kept in
/// canonical order.
struct CodeCandidate {
  GroupSpec group;
  int n = 0;
  std::vector<GroupElement> elements;
};

/// Pair (T0, T1) in H with T = T0 + f T1. make_split_candidate requires T0
/// and T1 to be disjoint; split_code does not, since a valid T may hold both
/// x and fx, and the evaluation functions below accept such pairs.
struct SplitCandidate {
  GroupSpec subgroup;
  int n = 0;
  std::vector<GroupElement> t0;
  std::vector<GroupElement> t1;
};

/// Sorts and validates; throws malformed_candidate.
CodeCandidate make_code_candidate(GroupSpec g, int n, std::vector<GroupElement> elements);
SplitCandidate make_split_candidate(GroupSpec h, int n, std::vector<GroupElement> t0, std::vector<GroupElement> t1);

/// Throw malformed_candidate on structural violations.
void validate(const CodeCandidate& c);
void validate(const SplitCandidate& s);

/// First element (canonical order) where the two sides of an identity differ.
struct Witness {
  GroupElement element;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

struct Verdict {
  bool holds = false;
  std::optional<Witness> witness;
};

/// T^2 = 2(G - f) - T^(2) + 2n e  in Z[G].
Verdict verify_code(const CodeCandidate& c);

/// T0 = T cap H and T1 = fT cap H, written in the coordinates of H.
SplitCandidate split_code(const CodeCandidate& c);
/// T0 + f T1 back in G; inverse of split_code.
CodeCandidate join_split(const GroupSpec& g, const SplitCandidate& s);

struct SplitVerdict {
  bool holds = false;
  Verdict product;     // T0 T1 = H - e
  Verdict square_sum;  // T0^2 + T1^2 = 2H - T0^(2) - T1^(2) + 2n e
};

SplitVerdict verify_split(const SplitCandidate& s);

/// Necessary conditions (a)..(h) on a split pair, each evaluated directly by
/// set algebra. Only requires the elements to belong to H, so it can screen
/// structurally broken pairs too.
struct BatteryReport {
  static constexpr std::array<const char*, 8> kNames = {"a", "b", "c", "d", "e", "f", "g", "h"};
  std::array<bool, 8> passed{};

  bool all() const;
  /// Index of the first failing item, or -1.
  int first_failure() const;
};

BatteryReport necessary_battery(const SplitCandidate& s);

enum class Side { X, Y };

/// Partition of H by multiplicity in  T^(2) T0  (side X) or  T^(2) T1
/// (side Y), where T = T0 + T1 in Z[H].
struct MultiplicityPartition {
  Side side = Side::X;
  std::map<int, std::int64_t> sizes;   // i -> |X_i|, zero classes included for i <= max
  int max_multiplicity = 0;            // M0 or M1
  std::int64_t weighted_mass = 0;      // sum_i i |X_i|
  std::int64_t expected_weighted = 0;  // (2n+1) k
  std::int64_t class_total = 0;        // sum_i |X_i|
  std::int64_t subgroup_order = 0;
  bool mass_identities_hold = false;
  std::vector<std::int64_t> multiplicity;  // per element of H, canonical order
};

MultiplicityPartition multiplicity_partition(const SplitCandidate& s, Side side);

struct Thetas {
  std::int64_t theta0 = 0;   // |(T0^2 \ T0^(2)) cap T^(4)|
  std::int64_t theta11 = 0;  // |(T1^2 \ (T1^(2) cup {e})) cap T^(4)|
  std::int64_t theta12 = 0;  // |T1 cap T^(2)|
  /// theta11 + theta12 / 2 when theta12 is even.
  std::optional<std::int64_t> theta1;
  bool sum_identity_holds = false;  // theta0 + theta11 + theta12 = 2n
  bool diagnostic_only = false;     // input failed verify_split
};

Thetas compute_thetas(const SplitCandidate& s);

/// Counts of pairs i < j of translates a_i T_k, a_j T_k meeting in exactly
/// 0, 1, 2 elements, with a_0 = e, then T0^(2), then T1^(2) in canonical order.
struct PairCounts {
  int k = 0;
  std::array<std::int64_t, 3> counts{};     // C_{k,0}, C_{k,1}, C_{k,2}
  std::int64_t over_two = 0;                // pairs meeting in more than two elements
  std::int64_t intersection_sum = 0;        // sum_{i<j} |a_i T_k cap a_j T_k|
  // Closed forms, doubled so that halves stay integral.
  std::int64_t formula_c1_twice = 0;
  std::int64_t formula_c2_twice = 0;
  std::int64_t formula_sum = 0;
  bool formulas_hold = false;
  bool diagnostic_only = false;
};

PairCounts pair_intersection_counts(const SplitCandidate& s, int k);
/// Translates a_0..a_2n in the order used by pair_intersection_counts.
std::vector<GroupElement> translate_sequence(const SplitCandidate& s);

struct InclusionExclusion {
  // Closed form: sum_{i>=1}|X_i| = (2n+1)k - 2(k-1)k + theta + sum_{s>=3} (s-1)(s-2)/2 |X_s|
  bool x_closed_form = false;
  bool y_closed_form = false;
  // Raw inclusion-exclusion with the brute-force pair sums instead of the closed forms.
  bool x_raw = false;
  bool y_raw = false;
  std::int64_t x_lhs = 0, x_rhs = 0, y_lhs = 0, y_rhs = 0;
  bool diagnostic_only = false;

  bool holds() const { return x_closed_form && y_closed_form && x_raw && y_raw; }
};

InclusionExclusion inclusion_exclusion_check(const SplitCandidate& s);

struct TripleProduct {
  bool x_exact = false;  // T^(2) T0 = (2k0-k1) H + T1 - T0^3 + 2n T0
  bool y_exact = false;  // T^(2) T1 = (2k1-k0) H + T0 - T1^3 + 2n T1
  bool x_mod3 = false;   // same with T0^3 replaced by T0^(3), modulo 3
  bool y_mod3 = false;
  bool diagnostic_only = false;

  bool holds() const { return x_exact && y_exact && x_mod3 && y_mod3; }
};

TripleProduct triple_product_check(const SplitCandidate& s);

/// Repeated cubes in T0^(3) and T1^(3); meaningful when 3 | n-1.
struct Order3Report {
  bool precondition_met = false;  // 3 | n-1 and verify_split holds
  std::array<std::map<std::int64_t, std::int64_t>, 2> cube_histogram;  // element index -> multiplicity
  std::array<std::vector<GroupElement>, 2> repeated;                    // Delta_j: cubes hit exactly twice
  std::array<std::int64_t, 2> max_multiplicity{};
  std::int64_t identity_multiplicity_t0 = 0;
  std::vector<std::string> violations;  // failed bounds, by name
};

Order3Report order3_repetition_report(const SplitCandidate& s);

/// Everything above for one split pair.
struct AnalysisReport {
  int n = 0;
  std::int64_t k0 = 0, k1 = 0;
  bool verified = false;
  MultiplicityPartition x, y;
  Thetas thetas;
  PairCounts c0, c1;
  std::int64_t ell0 = 0;  // |T1 cap T0^(3)|
  std::int64_t ell1 = 0;  // |T0 cap T1^(3)|
  InclusionExclusion inclusion_exclusion;
  TripleProduct triple_product;
  std::optional<Order3Report> order3;  // present when 3 | n-1
  bool e_in_x1 = false;
  bool x_parity_pattern = false;  // |X_1| odd, |X_i| even otherwise
};

AnalysisReport analyze(const SplitCandidate& s);

}  // namespace apll
