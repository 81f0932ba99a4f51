#include "apll/group_ring.hpp"

#include <stdexcept>

#include "apll/number_theory.hpp"

namespace apll {

namespace {

void require_same_group(const RingElement& a, const RingElement& b) {
  if (!(a.group() == b.group())) {
    throw std::invalid_argument("group ring operands live in different groups: " + a.group().to_string() +
                                " vs " + b.group().to_string());
  }
}

void require_member(const GroupSpec& g, const GroupElement& a) {
  if (!g.contains(a)) throw std::invalid_argument("element is not in group " + g.to_string());
}

}  // namespace

void RingElement::accumulate(std::int64_t index, std::int64_t delta) {
  if (delta == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(index, delta);
  if (!inserted) {
    it->second = nt::checked_add(it->second, delta);
    if (it->second == 0) coeffs_.erase(it);
  }
}

RingElement RingElement::from_set(const GroupSpec& g, std::span<const GroupElement> elements) {
  RingElement out(g);
  for (const auto& a : elements) {
    require_member(g, a);
    if (!out.coeffs_.try_emplace(g.index_of(a), 1).second) {
      throw std::invalid_argument("from_set: duplicate element " + g.format_element(a));
    }
  }
  return out;
}

RingElement RingElement::from_multiset(const GroupSpec& g, std::span<const GroupElement> elements) {
  RingElement out(g);
  for (const auto& a : elements) {
    require_member(g, a);
    out.accumulate(g.index_of(a), 1);
  }
  return out;
}

RingElement RingElement::from_element(const GroupSpec& g, const GroupElement& a, std::int64_t coeff) {
  require_member(g, a);
  RingElement out(g);
  out.accumulate(g.index_of(a), coeff);
  return out;
}

RingElement RingElement::whole_group(const GroupSpec& g) {
  RingElement out(g);
  for (std::int64_t i = 0; i < g.order(); ++i) out.coeffs_.emplace_hint(out.coeffs_.end(), i, 1);
  return out;
}

RingElement RingElement::identity(const GroupSpec& g) { return from_element(g, g.identity()); }

std::int64_t RingElement::coefficient(const GroupElement& a) const {
  require_member(group_, a);
  return coefficient_at(group_.index_of(a));
}

std::int64_t RingElement::coefficient_at(std::int64_t index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? 0 : it->second;
}

void RingElement::set_coefficient(const GroupElement& a, std::int64_t value) {
  require_member(group_, a);
  const std::int64_t idx = group_.index_of(a);
  if (value == 0) {
    coeffs_.erase(idx);
  } else {
    coeffs_[idx] = value;
  }
}

std::vector<GroupElement> RingElement::support() const {
  std::vector<GroupElement> out;
  out.reserve(coeffs_.size());
  for (const auto& [idx, c] : coeffs_) out.push_back(group_.element_at(idx));
  return out;
}

std::int64_t RingElement::total() const {
  std::int64_t s = 0;
  for (const auto& [idx, c] : coeffs_) s = nt::checked_add(s, c);
  return s;
}

RingElement add(const RingElement& a, const RingElement& b) {
  require_same_group(a, b);
  RingElement out = a;
  for (const auto& [idx, c] : b.coeffs_) out.accumulate(idx, c);
  return out;
}

RingElement sub(const RingElement& a, const RingElement& b) {
  require_same_group(a, b);
  RingElement out = a;
  for (const auto& [idx, c] : b.coeffs_) out.accumulate(idx, nt::checked_mul(-1, c));
  return out;
}

RingElement scale(std::int64_t lambda, const RingElement& a) {
  RingElement out(a.group_);
  if (lambda == 0) return out;
  for (const auto& [idx, c] : a.coeffs_) out.coeffs_.emplace_hint(out.coeffs_.end(), idx, nt::checked_mul(lambda, c));
  return out;
}

RingElement mul(const RingElement& a, const RingElement& b) {
  require_same_group(a, b);
  const GroupSpec& g = a.group_;
  RingElement out(g);
  std::vector<GroupElement> left, right;
  left.reserve(a.coeffs_.size());
  right.reserve(b.coeffs_.size());
  for (const auto& [idx, c] : a.coeffs_) left.push_back(g.element_at(idx));
  for (const auto& [idx, c] : b.coeffs_) right.push_back(g.element_at(idx));

  std::size_t i = 0;
  for (const auto& [ia, ca] : a.coeffs_) {
    std::size_t j = 0;
    for (const auto& [ib, cb] : b.coeffs_) {
      out.accumulate(g.index_of(op(g, left[i], right[j])), nt::checked_mul(ca, cb));
      ++j;
    }
    ++i;
  }
  return out;
}

RingElement power_op(const RingElement& a, std::int64_t t) {
  const GroupSpec& g = a.group_;
  RingElement out(g);
  for (const auto& [idx, c] : a.coeffs_) out.accumulate(g.index_of(power(g, g.element_at(idx), t)), c);
  return out;
}

RingElement mod_reduce(const RingElement& a, std::int64_t m) {
  if (m < 2) throw std::invalid_argument("mod_reduce modulus must be >= 2");
  RingElement out(a.group_);
  for (const auto& [idx, c] : a.coeffs_) {
    const std::int64_t r = nt::mod_floor(c, m);
    if (r != 0) out.coeffs_.emplace_hint(out.coeffs_.end(), idx, r);
  }
  return out;
}

RingElement ring_pow(const RingElement& a, int k) {
  if (k < 1) throw std::invalid_argument("ring_pow exponent must be >= 1");
  RingElement out = a;
  for (int i = 1; i < k; ++i) out = mul(out, a);
  return out;
}

}  // namespace apll
