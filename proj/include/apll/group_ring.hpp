#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "apll/abelian_group.hpp"

namespace apll {

/// Formal sum  sum_g a_g g  in Z[G]. Coefficients are stored sparsely, keyed
/// by canonical element index; zero coefficients are never stored.
/// Arithmetic is exact 64-bit with overflow detection.
class RingElement {
 public:
  explicit RingElement(GroupSpec group) : group_(std::move(group)) {}

  /// Sum of the (distinct) elements of a set; duplicates are rejected.
  static RingElement from_set(const GroupSpec& g, std::span<const GroupElement> elements);
  /// Multiset version: repeated elements accumulate.
  static RingElement from_multiset(const GroupSpec& g, std::span<const GroupElement> elements);
  static RingElement from_element(const GroupSpec& g, const GroupElement& a, std::int64_t coeff = 1);
  /// The element  sum_{g in G} g.
  static RingElement whole_group(const GroupSpec& g);
  static RingElement identity(const GroupSpec& g);

  const GroupSpec& group() const { return group_; }
  std::int64_t coefficient(const GroupElement& a) const;
  std::int64_t coefficient_at(std::int64_t index) const;
  void set_coefficient(const GroupElement& a, std::int64_t value);

  /// Elements with non-zero coefficient, canonical order.
  std::vector<GroupElement> support() const;
  /// Sum of all coefficients (augmentation).
  std::int64_t total() const;
  bool is_zero() const { return coeffs_.empty(); }

  const std::map<std::int64_t, std::int64_t>& terms() const { return coeffs_; }

  bool operator==(const RingElement& other) const {
    return group_ == other.group_ && coeffs_ == other.coeffs_;
  }

 private:
  friend RingElement add(const RingElement&, const RingElement&);
  friend RingElement sub(const RingElement&, const RingElement&);
  friend RingElement scale(std::int64_t, const RingElement&);
  friend RingElement mul(const RingElement&, const RingElement&);
  friend RingElement power_op(const RingElement&, std::int64_t);
  friend RingElement mod_reduce(const RingElement&, std::int64_t);

  void accumulate(std::int64_t index, std::int64_t delta);

  GroupSpec group_;
  std::map<std::int64_t, std::int64_t> coeffs_;
};

RingElement add(const RingElement& a, const RingElement& b);
RingElement sub(const RingElement& a, const RingElement& b);
RingElement scale(std::int64_t lambda, const RingElement& a);
/// Convolution product.
RingElement mul(const RingElement& a, const RingElement& b);
/// A^(t) = sum_g a_g g^t; collisions add up.
RingElement power_op(const RingElement& a, std::int64_t t);
/// Coefficients reduced into [0, m).
RingElement mod_reduce(const RingElement& a, std::int64_t m);
/// A^k by repeated multiplication, k >= 1.
RingElement ring_pow(const RingElement& a, int k);

inline RingElement operator+(const RingElement& a, const RingElement& b) { return add(a, b); }
inline RingElement operator-(const RingElement& a, const RingElement& b) { return sub(a, b); }
inline RingElement operator*(const RingElement& a, const RingElement& b) { return mul(a, b); }
inline RingElement operator*(std::int64_t lambda, const RingElement& a) { return scale(lambda, a); }

}  // namespace apll
