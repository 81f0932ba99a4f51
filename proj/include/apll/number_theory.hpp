#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Exact integer helpers shared by the group, lattice and sieve modules.
// Nothing in here touches floating point.
namespace apll::nt {

/// floor(sqrt(x)) computed with integer Newton steps.
std::uint64_t isqrt(std::uint64_t x);

bool is_perfect_square(std::uint64_t x);

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t x);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
/// Trial division, short-circuited by is_prime on the cofactor.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t x);

/// Number of integer partitions of k.
std::uint64_t partition_count(int k);

/// All partitions of k, each in non-decreasing order, listed in
/// order of decreasing largest part.
std::vector<std::vector<int>> partitions(int k);

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// Mathematical modulo: result in [0, m) for m > 0.
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Floor division for m > 0.
constexpr std::int64_t div_floor(std::int64_t a, std::int64_t m) {
  std::int64_t q = a / m;
  return (a % m != 0 && a < 0) ? q - 1 : q;
}

// Overflow-checked 64-bit arithmetic; throws std::overflow_error.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace apll::nt
