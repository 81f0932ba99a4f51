#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

// Per-dimension classification of n by the known existence and
// nonexistence results for packing radius 2.
namespace apll {

enum class SieveStatus { Exists, Excluded, Open };
enum class SieveReason { ExampleN1, ExampleN2, ThmMainMod6, PropKnown, PrimeResult, None };

/// "EXISTS", "EXCLUDED", "OPEN".
std::string to_string(SieveStatus s);
/// "EXAMPLE_N1", ..., "NONE".
std::string to_string(SieveReason r);

struct SieveVerdict {
  std::int64_t n = 0;
  SieveStatus status = SieveStatus::Open;
  SieveReason reason = SieveReason::None;
  std::uint64_t n2n1 = 0;  // n^2 + n + 1
  /// Every predicate evaluated, as "key=value" fields joined by ';'.
  std::string detail;
};

/// Largest n accepted by classify (keeps n^2+n+1 and 8n-7 inside 64 bits).
inline constexpr std::int64_t kSieveMaxN = 3'000'000'000LL;
/// Upper end of the range in which the primality result is applied.
inline constexpr std::int64_t kPrimeResultMaxN = 100'000;
inline constexpr std::int64_t kSieveRangeMax = 10'000'000;

/// Requires 1 <= n <= kSieveMaxN.
SieveVerdict classify(std::int64_t n, bool use_prime_result);

struct SieveTable {
  std::vector<SieveVerdict> rows;
  std::map<std::string, std::int64_t> status_histogram;  // EXISTS / EXCLUDED / OPEN
  std::map<std::string, std::int64_t> reason_histogram;
};

/// 1 <= lo <= hi <= 10^7; std::out_of_range otherwise.
SieveTable classify_range(std::int64_t lo, std::int64_t hi, bool use_prime_result, int threads = 1);

/// Header plus one line per row: n,status,reason,n2n1,trace
std::string to_csv(const SieveTable& table);

}  // namespace apll
