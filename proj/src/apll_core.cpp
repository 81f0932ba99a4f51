#include "apll/apll_core.hpp"

#include <algorithm>
#include <set>

#include "apll/errors.hpp"

namespace apll {

namespace {

using IndexSet = std::set<std::int64_t>;

std::string fmt_list(const GroupSpec& g, const std::vector<GroupElement>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ";";
    s += g.format_element(xs[i]);
  }
  return s + "}";
}

void require_members(const GroupSpec& g, const std::vector<GroupElement>& xs, const char* what) {
  for (const auto& x : xs) {
    if (!g.contains(x)) throw malformed_candidate(std::string(what) + ": element outside " + g.to_string());
  }
  std::vector<GroupElement> sorted = xs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw malformed_candidate(std::string(what) + ": repeated element in " + fmt_list(g, xs));
  }
}

void require_inverse_closed(const GroupSpec& g, const std::vector<GroupElement>& xs, const char* what) {
  std::set<GroupElement> s(xs.begin(), xs.end());
  for (const auto& x : xs) {
    if (!s.count(inverse(g, x))) {
      throw malformed_candidate(std::string(what) + " is not inverse-closed: missing inverse of " +
                                g.format_element(x));
    }
  }
}

IndexSet index_set(const GroupSpec& g, const std::vector<GroupElement>& xs) {
  IndexSet s;
  for (const auto& x : xs) s.insert(g.index_of(x));
  return s;
}

IndexSet support_set(const RingElement& a) {
  IndexSet s;
  for (const auto& [idx, c] : a.terms()) s.insert(idx);
  return s;
}

IndexSet intersect(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

IndexSet difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

bool subset_of_identity(const IndexSet& s) { return s.empty() || (s.size() == 1 && *s.begin() == 0); }

Verdict compare(const RingElement& lhs, const RingElement& rhs) {
  const GroupSpec& g = lhs.group();
  for (std::int64_t i = 0; i < g.order(); ++i) {
    const std::int64_t l = lhs.coefficient_at(i);
    const std::int64_t r = rhs.coefficient_at(i);
    if (l != r) return Verdict{false, Witness{g.element_at(i), l, r}};
  }
  return Verdict{true, std::nullopt};
}

std::int64_t k0_of(const SplitCandidate& s) { return static_cast<std::int64_t>(s.t0.size()); }
std::int64_t k1_of(const SplitCandidate& s) { return static_cast<std::int64_t>(s.t1.size()); }

// Shared quantities of one split pair.
struct SplitRing {
  RingElement t0, t1, hat;
  explicit SplitRing(const SplitCandidate& s)
      : t0(RingElement::from_set(s.subgroup, s.t0)),
        t1(RingElement::from_set(s.subgroup, s.t1)),
        hat(t0 + t1) {}
};

}  // namespace

CodeCandidate make_code_candidate(GroupSpec g, int n, std::vector<GroupElement> elements) {
  std::sort(elements.begin(), elements.end());
  CodeCandidate c{std::move(g), n, std::move(elements)};
  validate(c);
  return c;
}

SplitCandidate make_split_candidate(GroupSpec h, int n, std::vector<GroupElement> t0, std::vector<GroupElement> t1) {
  std::sort(t0.begin(), t0.end());
  std::sort(t1.begin(), t1.end());
  SplitCandidate s{std::move(h), n, std::move(t0), std::move(t1)};
  validate(s);
  return s;
}

void validate(const CodeCandidate& c) {
  if (c.n < 1) throw malformed_candidate("n must be positive");
  const std::int64_t n = c.n;
  if (c.group.order() != 2 * (n * n + n + 1)) {
    throw malformed_candidate("group " + c.group.to_string() + " does not have order 2(n^2+n+1) for n=" +
                              std::to_string(n));
  }
  require_members(c.group, c.elements, "T");
  if (static_cast<std::int64_t>(c.elements.size()) != 2 * n + 1) {
    throw malformed_candidate("|T| must be 2n+1 = " + std::to_string(2 * n + 1) + ", got " +
                              std::to_string(c.elements.size()));
  }
  if (std::find(c.elements.begin(), c.elements.end(), c.group.identity()) == c.elements.end()) {
    throw malformed_candidate("T must contain the identity");
  }
  require_inverse_closed(c.group, c.elements, "T");
}

namespace {

void check_split(const SplitCandidate& s, bool require_disjoint) {
  if (s.n < 1) throw malformed_candidate("n must be positive");
  const std::int64_t n = s.n;
  if (s.subgroup.order() != n * n + n + 1) {
    throw malformed_candidate("subgroup " + s.subgroup.to_string() + " does not have order n^2+n+1 for n=" +
                              std::to_string(n));
  }
  require_members(s.subgroup, s.t0, "T0");
  require_members(s.subgroup, s.t1, "T1");
  if (static_cast<std::int64_t>(s.t0.size() + s.t1.size()) != 2 * n + 1) {
    throw malformed_candidate("|T0|+|T1| must be 2n+1");
  }
  if (std::find(s.t0.begin(), s.t0.end(), s.subgroup.identity()) == s.t0.end()) {
    throw malformed_candidate("T0 must contain the identity");
  }
  require_inverse_closed(s.subgroup, s.t0, "T0");
  require_inverse_closed(s.subgroup, s.t1, "T1");
  if (require_disjoint && !intersect(index_set(s.subgroup, s.t0), index_set(s.subgroup, s.t1)).empty()) {
    throw malformed_candidate("T0 and T1 must be disjoint");
  }
}

// split_code of a valid T containing both x and fx yields overlapping T0, T1.
// Such pairs are evaluated (they fail T0 T1 = H - e at e) rather than rejected.
void validate_evaluable(const SplitCandidate& s) { check_split(s, false); }

}  // namespace

void validate(const SplitCandidate& s) { check_split(s, true); }

Verdict verify_code(const CodeCandidate& c) {
  validate(c);
  const GroupSpec& g = c.group;
  const RingElement t = RingElement::from_set(g, c.elements);
  const RingElement f = RingElement::from_element(g, unique_involution(g));
  const RingElement rhs = 2 * (RingElement::whole_group(g) - f) - power_op(t, 2) +
                          RingElement::from_element(g, g.identity(), 2 * c.n);
  return compare(t * t, rhs);
}

SplitCandidate split_code(const CodeCandidate& c) {
  validate(c);
  const SubgroupEmbedding emb = index2_subgroup(c.group);
  const GroupElement f = unique_involution(c.group);
  SplitCandidate s{emb.child(), c.n, {}, {}};
  for (const auto& t : c.elements) {
    if (auto h = emb.project(t)) s.t0.push_back(*h);
    if (auto h = emb.project(op(c.group, f, t))) s.t1.push_back(*h);
  }
  std::sort(s.t0.begin(), s.t0.end());
  std::sort(s.t1.begin(), s.t1.end());
  return s;
}

CodeCandidate join_split(const GroupSpec& g, const SplitCandidate& s) {
  const SubgroupEmbedding emb = index2_subgroup(g);
  if (!(emb.child() == s.subgroup)) {
    throw std::invalid_argument("split lives in " + s.subgroup.to_string() + ", not in the index-2 subgroup of " +
                                g.to_string());
  }
  const GroupElement f = unique_involution(g);
  std::vector<GroupElement> out;
  for (const auto& x : s.t0) out.push_back(emb.inject(x));
  for (const auto& x : s.t1) out.push_back(op(g, f, emb.inject(x)));
  return make_code_candidate(g, s.n, std::move(out));
}

SplitVerdict verify_split(const SplitCandidate& s) {
  validate_evaluable(s);
  const GroupSpec& h = s.subgroup;
  const SplitRing r(s);
  const RingElement whole = RingElement::whole_group(h);
  const RingElement e = RingElement::identity(h);

  SplitVerdict v;
  v.product = compare(r.t0 * r.t1, whole - e);
  v.square_sum = compare(r.t0 * r.t0 + r.t1 * r.t1,
                         2 * whole - power_op(r.t0, 2) - power_op(r.t1, 2) + (2 * s.n) * e);
  v.holds = v.product.holds && v.square_sum.holds;
  return v;
}

bool BatteryReport::all() const { return first_failure() < 0; }

int BatteryReport::first_failure() const {
  for (int i = 0; i < 8; ++i) {
    if (!passed[i]) return i;
  }
  return -1;
}

BatteryReport necessary_battery(const SplitCandidate& s) {
  const GroupSpec& h = s.subgroup;
  require_members(h, s.t0, "T0");
  require_members(h, s.t1, "T1");

  const IndexSet t0 = index_set(h, s.t0);
  const IndexSet t1 = index_set(h, s.t1);
  const RingElement r0 = RingElement::from_set(h, s.t0);
  const RingElement r1 = RingElement::from_set(h, s.t1);
  const IndexSet sq0 = support_set(power_op(r0, 2));
  const IndexSet sq1 = support_set(power_op(r1, 2));
  const IndexSet cube0 = support_set(power_op(r0, 3));
  const std::int64_t e = 0;
  const std::int64_t k0 = k0_of(s), k1 = k1_of(s), n = s.n;

  IndexSet distinct_products;
  for (const auto& a : s.t0) {
    for (const auto& b : s.t0) {
      if (!(a == b)) distinct_products.insert(h.index_of(op(h, a, b)));
    }
  }

  BatteryReport rep;
  rep.passed[0] = t0.count(e) && !t1.count(e);
  rep.passed[1] = intersect(t0, t1).empty() && intersect(sq0, sq1).empty();
  {
    IndexSet sq0_ne = sq0;
    sq0_ne.erase(e);
    rep.passed[2] = intersect(t0, sq0_ne).empty() && intersect(t0, sq1).empty();
  }
  rep.passed[3] = subset_of_identity(intersect(distinct_products, sq0));
  rep.passed[4] = (n % 2 == 0) || (k0 == n && k1 == n + 1);
  rep.passed[5] = (n % 2 != 0) || (k0 == n + 1 && k1 == n);
  rep.passed[6] = subset_of_identity(intersect(support_set(r0 * r0), support_set(r1 * r1)));
  rep.passed[7] = intersect(t0, cube0) == IndexSet{e};
  return rep;
}

MultiplicityPartition multiplicity_partition(const SplitCandidate& s, Side side) {
  validate_evaluable(s);
  const GroupSpec& h = s.subgroup;
  const SplitRing r(s);
  const RingElement prod = power_op(r.hat, 2) * (side == Side::X ? r.t0 : r.t1);
  const std::int64_t k = side == Side::X ? k0_of(s) : k1_of(s);

  MultiplicityPartition p;
  p.side = side;
  p.subgroup_order = h.order();
  p.multiplicity.resize(static_cast<std::size_t>(h.order()));
  for (std::int64_t i = 0; i < h.order(); ++i) {
    const std::int64_t m = prod.coefficient_at(i);
    p.multiplicity[static_cast<std::size_t>(i)] = m;
    p.max_multiplicity = std::max<int>(p.max_multiplicity, static_cast<int>(m));
  }
  for (int i = 0; i <= p.max_multiplicity; ++i) p.sizes[i] = 0;
  for (std::int64_t m : p.multiplicity) ++p.sizes[static_cast<int>(m)];
  for (const auto& [i, size] : p.sizes) {
    p.weighted_mass += i * size;
    p.class_total += size;
  }
  p.expected_weighted = (2 * static_cast<std::int64_t>(s.n) + 1) * k;
  p.mass_identities_hold = p.weighted_mass == p.expected_weighted && p.class_total == h.order();
  return p;
}

Thetas compute_thetas(const SplitCandidate& s) {
  validate_evaluable(s);
  const SplitRing r(s);
  const IndexSet hat2 = support_set(power_op(r.hat, 2));
  const IndexSet hat4 = support_set(power_op(r.hat, 4));
  const IndexSet t1 = support_set(r.t1);

  Thetas th;
  th.diagnostic_only = !verify_split(s).holds;
  th.theta0 = static_cast<std::int64_t>(
      intersect(difference(support_set(r.t0 * r.t0), support_set(power_op(r.t0, 2))), hat4).size());
  IndexSet excluded = support_set(power_op(r.t1, 2));
  excluded.insert(0);
  th.theta11 = static_cast<std::int64_t>(intersect(difference(support_set(r.t1 * r.t1), excluded), hat4).size());
  th.theta12 = static_cast<std::int64_t>(intersect(t1, hat2).size());
  if (th.theta12 % 2 == 0) th.theta1 = th.theta11 + th.theta12 / 2;
  th.sum_identity_holds =
      !th.diagnostic_only && th.theta0 + th.theta11 + th.theta12 == 2 * static_cast<std::int64_t>(s.n);
  return th;
}

std::vector<GroupElement> translate_sequence(const SplitCandidate& s) {
  const GroupSpec& h = s.subgroup;
  std::vector<GroupElement> sq0, sq1;
  for (const auto& x : s.t0) sq0.push_back(power(h, x, 2));
  for (const auto& x : s.t1) sq1.push_back(power(h, x, 2));
  std::sort(sq0.begin(), sq0.end());
  std::sort(sq1.begin(), sq1.end());
  std::vector<GroupElement> a{h.identity()};
  auto e_it = std::find(sq0.begin(), sq0.end(), h.identity());
  if (e_it != sq0.end()) sq0.erase(e_it);
  a.insert(a.end(), sq0.begin(), sq0.end());
  a.insert(a.end(), sq1.begin(), sq1.end());
  return a;
}

PairCounts pair_intersection_counts(const SplitCandidate& s, int k) {
  if (k != 0 && k != 1) throw std::invalid_argument("pair_intersection_counts: k must be 0 or 1");
  validate_evaluable(s);
  const GroupSpec& h = s.subgroup;
  const auto& tk = k == 0 ? s.t0 : s.t1;
  const std::vector<GroupElement> a = translate_sequence(s);

  std::vector<IndexSet> translates;
  translates.reserve(a.size());
  for (const auto& ai : a) {
    IndexSet t;
    for (const auto& x : tk) t.insert(h.index_of(op(h, ai, x)));
    translates.push_back(std::move(t));
  }

  PairCounts pc;
  pc.k = k;
  for (std::size_t i = 0; i < translates.size(); ++i) {
    for (std::size_t j = i + 1; j < translates.size(); ++j) {
      const auto m = static_cast<std::int64_t>(intersect(translates[i], translates[j]).size());
      pc.intersection_sum += m;
      if (m <= 2) {
        ++pc.counts[static_cast<std::size_t>(m)];
      } else {
        ++pc.over_two;
      }
    }
  }

  const Thetas th = compute_thetas(s);
  pc.diagnostic_only = th.diagnostic_only;
  const std::int64_t k0 = k0_of(s), k1 = k1_of(s);
  if (k == 0) {
    pc.formula_c1_twice = 2 * (2 * k0 - 2);
    pc.formula_c2_twice = 2 * (k0 - 1) * (k0 - 1) - th.theta0;
    pc.formula_sum = 2 * k0 * (k0 - 1) - th.theta0;
  } else {
    pc.formula_c1_twice = 4 * k1 - th.theta12;
    pc.formula_c2_twice = 2 * (k1 * k1 - 2 * k1) - th.theta11;
    // 2k1(k1-1) - theta12/2 - theta11, kept doubled-free when theta12 is even.
    pc.formula_sum = th.theta12 % 2 == 0 ? 2 * k1 * (k1 - 1) - th.theta12 / 2 - th.theta11 : -1;
  }
  pc.formulas_hold = !pc.diagnostic_only && pc.over_two == 0 && 2 * pc.counts[1] == pc.formula_c1_twice &&
                     2 * pc.counts[2] == pc.formula_c2_twice && pc.intersection_sum == pc.formula_sum &&
                     pc.intersection_sum == pc.counts[1] + 2 * pc.counts[2];
  return pc;
}

namespace {

std::int64_t higher_correction(const MultiplicityPartition& p) {
  std::int64_t sum = 0;
  for (const auto& [s, size] : p.sizes) {
    if (s >= 3) sum += static_cast<std::int64_t>(s - 1) * (s - 2) / 2 * size;
  }
  return sum;
}

std::int64_t nonzero_classes(const MultiplicityPartition& p) {
  std::int64_t sum = 0;
  for (const auto& [i, size] : p.sizes) {
    if (i >= 1) sum += size;
  }
  return sum;
}

}  // namespace

InclusionExclusion inclusion_exclusion_check(const SplitCandidate& s) {
  validate_evaluable(s);
  const std::int64_t n = s.n, k0 = k0_of(s), k1 = k1_of(s);
  const MultiplicityPartition x = multiplicity_partition(s, Side::X);
  const MultiplicityPartition y = multiplicity_partition(s, Side::Y);
  const Thetas th = compute_thetas(s);
  const PairCounts p0 = pair_intersection_counts(s, 0);
  const PairCounts p1 = pair_intersection_counts(s, 1);

  InclusionExclusion ie;
  ie.diagnostic_only = th.diagnostic_only;
  ie.x_lhs = nonzero_classes(x);
  ie.y_lhs = nonzero_classes(y);
  ie.x_rhs = (2 * n + 1) * k0 - 2 * (k0 - 1) * k0 + th.theta0 + higher_correction(x);
  ie.x_raw = ie.x_lhs == (2 * n + 1) * k0 - p0.intersection_sum + higher_correction(x);
  ie.y_raw = ie.y_lhs == (2 * n + 1) * k1 - p1.intersection_sum + higher_correction(y);
  ie.x_closed_form = !ie.diagnostic_only && ie.x_lhs == ie.x_rhs;
  if (th.theta1) {
    ie.y_rhs = (2 * n + 1) * k1 - 2 * (k1 - 1) * k1 + *th.theta1 + higher_correction(y);
    ie.y_closed_form = !ie.diagnostic_only && ie.y_lhs == ie.y_rhs;
  }
  return ie;
}

TripleProduct triple_product_check(const SplitCandidate& s) {
  validate_evaluable(s);
  const GroupSpec& h = s.subgroup;
  const SplitRing r(s);
  const std::int64_t n = s.n, k0 = k0_of(s), k1 = k1_of(s);
  const RingElement whole = RingElement::whole_group(h);
  const RingElement hat2 = power_op(r.hat, 2);

  const RingElement lhs_x = hat2 * r.t0;
  const RingElement lhs_y = hat2 * r.t1;
  const RingElement base_x = (2 * k0 - k1) * whole + r.t1 + (2 * n) * r.t0;
  const RingElement base_y = (2 * k1 - k0) * whole + r.t0 + (2 * n) * r.t1;

  TripleProduct tp;
  tp.diagnostic_only = !verify_split(s).holds;
  tp.x_exact = lhs_x == base_x - ring_pow(r.t0, 3);
  tp.y_exact = lhs_y == base_y - ring_pow(r.t1, 3);
  tp.x_mod3 = mod_reduce(lhs_x, 3) == mod_reduce(base_x - power_op(r.t0, 3), 3);
  tp.y_mod3 = mod_reduce(lhs_y, 3) == mod_reduce(base_y - power_op(r.t1, 3), 3);
  return tp;
}

Order3Report order3_repetition_report(const SplitCandidate& s) {
  validate_evaluable(s);
  const GroupSpec& h = s.subgroup;
  Order3Report rep;
  rep.precondition_met = (s.n - 1) % 3 == 0 && verify_split(s).holds;

  const std::array<const std::vector<GroupElement>*, 2> sides{&s.t0, &s.t1};
  for (std::size_t j = 0; j < 2; ++j) {
    for (const auto& x : *sides[j]) ++rep.cube_histogram[j][h.index_of(power(h, x, 3))];
    for (const auto& [idx, mult] : rep.cube_histogram[j]) {
      rep.max_multiplicity[j] = std::max(rep.max_multiplicity[j], mult);
      if (mult == 2) rep.repeated[j].push_back(h.element_at(idx));
    }
  }
  auto e_it = rep.cube_histogram[0].find(0);
  rep.identity_multiplicity_t0 = e_it == rep.cube_histogram[0].end() ? 0 : e_it->second;

  if (rep.max_multiplicity[0] > 2) rep.violations.push_back("t0_cube_multiplicity_above_2");
  if (rep.max_multiplicity[1] > 2) rep.violations.push_back("t1_cube_multiplicity_above_2");
  if (rep.identity_multiplicity_t0 != 1) rep.violations.push_back("identity_not_once_in_t0_cubes");
  if (rep.repeated[0].size() != 0 && rep.repeated[0].size() != 2) {
    rep.violations.push_back("t0_repeated_count_not_0_or_2");
  }
  if (rep.repeated[1].size() > 2) rep.violations.push_back("t1_repeated_count_above_2");
  return rep;
}

AnalysisReport analyze(const SplitCandidate& s) {
  validate_evaluable(s);
  const GroupSpec& h = s.subgroup;
  AnalysisReport rep;
  rep.n = s.n;
  rep.k0 = k0_of(s);
  rep.k1 = k1_of(s);
  rep.verified = verify_split(s).holds;
  rep.x = multiplicity_partition(s, Side::X);
  rep.y = multiplicity_partition(s, Side::Y);
  rep.thetas = compute_thetas(s);
  rep.c0 = pair_intersection_counts(s, 0);
  rep.c1 = pair_intersection_counts(s, 1);

  const RingElement r0 = RingElement::from_set(h, s.t0);
  const RingElement r1 = RingElement::from_set(h, s.t1);
  rep.ell0 = static_cast<std::int64_t>(intersect(support_set(r1), support_set(power_op(r0, 3))).size());
  rep.ell1 = static_cast<std::int64_t>(intersect(support_set(r0), support_set(power_op(r1, 3))).size());

  rep.inclusion_exclusion = inclusion_exclusion_check(s);
  rep.triple_product = triple_product_check(s);
  if ((s.n - 1) % 3 == 0) rep.order3 = order3_repetition_report(s);

  rep.e_in_x1 = rep.x.multiplicity[0] == 1;
  rep.x_parity_pattern = true;
  for (const auto& [i, size] : rep.x.sizes) {
    const bool odd = size % 2 != 0;
    if ((i == 1) != odd) rep.x_parity_pattern = false;
  }
  return rep;
}

}  // namespace apll
