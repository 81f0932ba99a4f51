#pragma once

// Reference computations for cyclic groups Z_m written with plain integer
// vectors. They share no code with the library and serve as oracles.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace naive {

using Coeffs = std::vector<long long>;  // index = residue mod m

inline long long md(long long a, long long m) { return ((a % m) + m) % m; }

inline Coeffs indicator(const std::vector<long long>& s, long long m) {
  Coeffs c(static_cast<std::size_t>(m), 0);
  for (long long x : s) c[static_cast<std::size_t>(md(x, m))] += 1;
  return c;
}

inline Coeffs conv(const Coeffs& a, const Coeffs& b) {
  const auto m = static_cast<long long>(a.size());
  Coeffs c(a.size(), 0);
  for (long long i = 0; i < m; ++i) {
    for (long long j = 0; j < m; ++j) c[static_cast<std::size_t>((i + j) % m)] += a[i] * b[j];
  }
  return c;
}

inline Coeffs dilate(const Coeffs& a, long long t) {
  const auto m = static_cast<long long>(a.size());
  Coeffs c(a.size(), 0);
  for (long long i = 0; i < m; ++i) c[static_cast<std::size_t>(md(i * t, m))] += a[i];
  return c;
}

/// Master identity in Z_{2m'}: T^2 + T^(2) == 2(G - f) + 2n e.
inline bool code_identity(const std::vector<long long>& t, long long n) {
  const long long order = 2 * (n * n + n + 1);
  const Coeffs a = indicator(t, order);
  const Coeffs lhs = conv(a, a);
  const Coeffs sq = dilate(a, 2);
  for (long long g = 0; g < order; ++g) {
    long long rhs = (g == order / 2) ? 0 : 2;
    if (g == 0) rhs += 2 * n;
    if (lhs[g] + sq[g] != rhs) return false;
  }
  return true;
}

/// Every inverse-closed T in Z_{2(n^2+n+1)} with 0 in T, |T| = 2n+1, avoiding
/// the involution, as sorted residue lists.
inline std::vector<std::vector<long long>> all_code_candidates(long long n) {
  const long long order = 2 * (n * n + n + 1);
  std::vector<long long> reps;
  for (long long x = 1; x < order / 2; ++x) reps.push_back(x);
  std::vector<std::vector<long long>> out;
  std::vector<int> pick(reps.size(), 0);
  std::fill(pick.end() - n, pick.end(), 1);
  do {
    std::vector<long long> t{0};
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (pick[i]) {
        t.push_back(reps[i]);
        t.push_back(order - reps[i]);
      }
    }
    std::sort(t.begin(), t.end());
    out.push_back(t);
  } while (std::next_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace naive
