#include "apll/number_theory.hpp"

#include <algorithm>
#include <stdexcept>

namespace apll::nt {

std::uint64_t isqrt(std::uint64_t x) {
  if (x < 2) return x;
  // Start above the root so the Newton iteration decreases monotonically.
  std::uint64_t r = std::uint64_t{1} << ((64 - __builtin_clzll(x)) / 2 + 1);
  while (true) {
    std::uint64_t next = (r + x / r) / 2;
    if (next >= r) break;
    r = next;
  }
  while (static_cast<unsigned __int128>(r) * r > x) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

bool is_perfect_square(std::uint64_t x) {
  std::uint64_t r = isqrt(x);
  return r * r == x;
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  static constexpr std::uint64_t kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kSmall) {
    if (x % p == 0) return x == p;
  }
  std::uint64_t d = x - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a proven witness set below 3.3e24.
  for (std::uint64_t a : kSmall) {
    std::uint64_t y = pow_mod(a, d, x);
    if (y == 1 || y == x - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      y = mul_mod(y, y, x);
      if (y == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t x) {
  std::vector<std::pair<std::uint64_t, int>> out;
  if (x < 2) return out;
  auto strip = [&](std::uint64_t p) {
    int e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  strip(2);
  for (std::uint64_t p = 3; p * p <= x; p += 2) {
    if (is_prime(x)) break;
    strip(p);
  }
  if (x > 1) out.emplace_back(x, 1);
  return out;
}

std::uint64_t partition_count(int k) {
  if (k < 0) return 0;
  std::vector<std::uint64_t> p(static_cast<std::size_t>(k) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= k; ++part) {
    for (int total = part; total <= k; ++total) p[total] += p[total - part];
  }
  return p[k];
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.emplace_back(current.rbegin(), current.rend());
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> partitions(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  if (k >= 0) partitions_rec(k, k, current, out);
  return out;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd(a, b), b < 0 ? -b : b);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

}  // namespace apll::nt
