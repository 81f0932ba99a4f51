#include "apll/abelian_group.hpp"

#include <charconv>
#include <stdexcept>

#include "apll/number_theory.hpp"

namespace apll {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view what) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

GroupSpec::GroupSpec(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
  for (std::int64_t d : factors_) {
    if (d < 2) throw std::invalid_argument("cyclic factor orders must be >= 2");
    order_ = nt::checked_mul(order_, d);
    exponent_ = nt::lcm(exponent_, d);
  }
}

GroupSpec GroupSpec::cyclic(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("cyclic group order must be positive");
  return m == 1 ? GroupSpec{} : GroupSpec{{m}};
}

GroupSpec GroupSpec::parse(std::string_view literal) {
  std::vector<std::int64_t> factors;
  std::string text(literal);
  // Normalise the accepted separators to 'x'.
  for (std::string_view sep : {"×", "*"}) {
    for (std::size_t pos = text.find(sep); pos != std::string::npos; pos = text.find(sep)) {
      text.replace(pos, sep.size(), "x");
    }
  }
  std::string_view rest(text);
  if (rest.empty()) throw std::invalid_argument("empty group literal");
  while (true) {
    std::size_t cut = rest.find_first_of("xX");
    std::string_view token = rest.substr(0, cut);
    if (token.size() < 2 || (token.front() != 'C' && token.front() != 'c')) {
      throw std::invalid_argument("bad group literal '" + std::string(literal) + "'");
    }
    std::int64_t d = parse_int(token.substr(1), "cyclic order");
    if (d < 1) throw std::invalid_argument("cyclic order must be positive in '" + std::string(literal) + "'");
    if (d > 1) factors.push_back(d);
    if (cut == std::string_view::npos) break;
    rest.remove_prefix(cut + 1);
  }
  return GroupSpec(std::move(factors));
}

bool GroupSpec::is_cyclic() const { return exponent_ == order_; }

std::string GroupSpec::to_string() const {
  if (factors_.empty()) return "C1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) out += 'x';
    out += 'C' + std::to_string(factors_[i]);
  }
  return out;
}

GroupElement GroupSpec::identity() const {
  return GroupElement(std::vector<std::int64_t>(factors_.size(), 0));
}

bool GroupSpec::contains(const GroupElement& a) const {
  if (a.exponents.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (a.exponents[i] < 0 || a.exponents[i] >= factors_[i]) return false;
  }
  return true;
}

GroupElement GroupSpec::make(std::initializer_list<std::int64_t> exps) const {
  return make(std::vector<std::int64_t>(exps));
}

GroupElement GroupSpec::make(const std::vector<std::int64_t>& exps) const {
  if (exps.size() != factors_.size()) {
    throw std::invalid_argument("element has " + std::to_string(exps.size()) + " coordinates, group " +
                                to_string() + " needs " + std::to_string(factors_.size()));
  }
  GroupElement out(exps);
  for (std::size_t i = 0; i < factors_.size(); ++i) out.exponents[i] = nt::mod_floor(exps[i], factors_[i]);
  return out;
}

std::int64_t GroupSpec::index_of(const GroupElement& a) const {
  std::int64_t index = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) index = index * factors_[i] + a.exponents[i];
  return index;
}

GroupElement GroupSpec::element_at(std::int64_t index) const {
  std::vector<std::int64_t> e(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    e[i] = index % factors_[i];
    index /= factors_[i];
  }
  return GroupElement(std::move(e));
}

std::vector<GroupElement> GroupSpec::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (std::int64_t i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

std::string GroupSpec::format_element(const GroupElement& a) const {
  if (factors_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < a.exponents.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(a.exponents[i]);
  }
  return out;
}

GroupElement GroupSpec::parse_element(std::string_view text) const {
  std::vector<std::int64_t> exps;
  while (true) {
    std::size_t cut = text.find(',');
    exps.push_back(parse_int(text.substr(0, cut), "element exponent"));
    if (cut == std::string_view::npos) break;
    text.remove_prefix(cut + 1);
  }
  if (factors_.empty() && exps.size() == 1 && exps[0] == 0) return identity();
  return make(exps);
}

GroupElement op(const GroupSpec& g, const GroupElement& a, const GroupElement& b) {
  GroupElement out(a.exponents);
  for (std::size_t i = 0; i < g.rank(); ++i) {
    out.exponents[i] = (a.exponents[i] + b.exponents[i]) % g.factors()[i];
  }
  return out;
}

GroupElement inverse(const GroupSpec& g, const GroupElement& a) {
  GroupElement out(a.exponents);
  for (std::size_t i = 0; i < g.rank(); ++i) {
    out.exponents[i] = a.exponents[i] == 0 ? 0 : g.factors()[i] - a.exponents[i];
  }
  return out;
}

GroupElement power(const GroupSpec& g, const GroupElement& a, std::int64_t t) {
  GroupElement out(a.exponents);
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const std::int64_t d = g.factors()[i];
    const auto prod = static_cast<__int128>(a.exponents[i]) * nt::mod_floor(t, d);
    out.exponents[i] = static_cast<std::int64_t>(prod % d);
  }
  return out;
}

std::int64_t element_order(const GroupSpec& g, const GroupElement& a) {
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const std::int64_t d = g.factors()[i];
    ord = nt::lcm(ord, d / nt::gcd(d, a.exponents[i]));
  }
  return ord;
}

namespace {

std::size_t even_factor_slot(const GroupSpec& g) {
  if (g.order() % 2 != 0 || g.order() % 4 == 0) {
    throw std::domain_error("group " + g.to_string() + " does not have order 2m with m odd");
  }
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (g.factors()[i] % 2 == 0) return i;
  }
  throw std::logic_error("even order without an even factor");
}

}  // namespace

GroupElement unique_involution(const GroupSpec& g) {
  const std::size_t slot = even_factor_slot(g);
  GroupElement f = g.identity();
  f.exponents[slot] = g.factors()[slot] / 2;
  return f;
}

SubgroupEmbedding::SubgroupEmbedding(GroupSpec parent, GroupSpec child, std::vector<int> parent_slot,
                                     std::vector<std::int64_t> multiplier)
    : parent_(std::move(parent)),
      child_(std::move(child)),
      parent_slot_(std::move(parent_slot)),
      multiplier_(std::move(multiplier)) {}

GroupElement SubgroupEmbedding::inject(const GroupElement& c) const {
  GroupElement out = parent_.identity();
  for (std::size_t i = 0; i < child_.rank(); ++i) {
    out.exponents[parent_slot_[i]] = c.exponents[i] * multiplier_[i];
  }
  return out;
}

std::optional<GroupElement> SubgroupEmbedding::project(const GroupElement& p) const {
  GroupElement out = child_.identity();
  std::vector<bool> used(parent_.rank(), false);
  for (std::size_t i = 0; i < child_.rank(); ++i) {
    const std::int64_t x = p.exponents[parent_slot_[i]];
    if (x % multiplier_[i] != 0) return std::nullopt;
    out.exponents[i] = x / multiplier_[i];
    used[parent_slot_[i]] = true;
  }
  // A parent factor of order 2 has no child slot; its coordinate must vanish.
  for (std::size_t j = 0; j < parent_.rank(); ++j) {
    if (!used[j] && p.exponents[j] != 0) return std::nullopt;
  }
  return out;
}

SubgroupEmbedding index2_subgroup(const GroupSpec& g) {
  const std::size_t even = even_factor_slot(g);
  std::vector<std::int64_t> child_factors;
  std::vector<int> slots;
  std::vector<std::int64_t> multipliers;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const std::int64_t d = g.factors()[i];
    if (i == even) {
      if (d / 2 >= 2) {
        child_factors.push_back(d / 2);
        slots.push_back(static_cast<int>(i));
        multipliers.push_back(2);
      }
    } else {
      child_factors.push_back(d);
      slots.push_back(static_cast<int>(i));
      multipliers.push_back(1);
    }
  }
  return SubgroupEmbedding(g, GroupSpec(std::move(child_factors)), std::move(slots), std::move(multipliers));
}

std::vector<std::int64_t> power_automorphisms(const GroupSpec& g) {
  std::vector<std::int64_t> out;
  const std::int64_t e = g.exponent();
  if (e == 1) return {1};
  for (std::int64_t t = 1; t < e; ++t) {
    if (nt::gcd(t, e) == 1) out.push_back(t);
  }
  return out;
}

std::vector<GroupSpec> enumerate_abelian_groups(std::int64_t m) {
  constexpr std::int64_t kMax = std::int64_t{1} << 48;
  if (m < 1 || m > kMax) throw std::out_of_range("group order must lie in [1, 2^48]");
  const auto fac = nt::factorize(static_cast<std::uint64_t>(m));

  std::int64_t merged = 1;
  std::vector<std::pair<std::int64_t, std::vector<std::vector<int>>>> choices;
  for (const auto& [p, e] : fac) {
    if (e == 1) {
      merged *= static_cast<std::int64_t>(p);
    } else {
      choices.emplace_back(static_cast<std::int64_t>(p), nt::partitions(e));
    }
  }

  std::vector<GroupSpec> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    std::vector<std::int64_t> factors;
    if (merged > 1) factors.push_back(merged);
    for (std::size_t k = 0; k < choices.size(); ++k) {
      for (int part : choices[k].second[pick[k]]) {
        std::int64_t q = 1;
        for (int j = 0; j < part; ++j) q *= choices[k].first;
        factors.push_back(q);
      }
    }
    out.emplace_back(std::move(factors));
    // Odometer over the per-prime partition choices, last prime fastest.
    std::size_t k = choices.size();
    while (k > 0) {
      --k;
      if (++pick[k] < choices[k].second.size()) break;
      pick[k] = 0;
      if (k == 0) return out;
    }
    if (choices.empty()) return out;
  }
}

}  // namespace apll
