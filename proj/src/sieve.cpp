#include "apll/sieve.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "apll/number_theory.hpp"

namespace apll {

std::string to_string(SieveStatus s) {
  switch (s) {
    case SieveStatus::Exists: return "EXISTS";
    case SieveStatus::Excluded: return "EXCLUDED";
    case SieveStatus::Open: return "OPEN";
  }
  return "?";
}

std::string to_string(SieveReason r) {
  switch (r) {
    case SieveReason::ExampleN1: return "EXAMPLE_N1";
    case SieveReason::ExampleN2: return "EXAMPLE_N2";
    case SieveReason::ThmMainMod6: return "THM_MAIN_MOD6";
    case SieveReason::PropKnown: return "PROP_KNOWN";
    case SieveReason::PrimeResult: return "PRIME_RESULT";
    case SieveReason::None: return "NONE";
  }
  return "?";
}

SieveVerdict classify(std::int64_t n, bool use_prime_result) {
  if (n < 1 || n > kSieveMaxN) throw std::out_of_range("classify: n out of range");
  const auto un = static_cast<std::uint64_t>(n);
  const std::uint64_t m = un * un + un + 1;

  const std::int64_t mod6 = n % 6;
  const bool mod6_rule = n >= 3 && (mod6 == 0 || mod6 == 3 || mod6 == 4);

  const bool sq = nt::is_perfect_square(8 * un - 7);
  bool div_small = false;
  std::string divisors;
  for (std::uint64_t p : {3ULL, 7ULL, 19ULL, 31ULL}) {
    if (m % p == 0) {
      div_small = true;
      divisors += (divisors.empty() ? "" : "|") + std::to_string(p);
    }
  }
  const bool div13 = m % 13 == 0;
  // 8n - 11 in {13 k^2}; 8n - 11 is negative for n = 1 and never of that form.
  bool in13k2 = false;
  if (n >= 2) {
    const std::uint64_t v = 8 * un - 11;
    in13k2 = v % 13 == 0 && nt::is_perfect_square(v / 13);
  }
  const bool prop_rule = !sq && (div_small || (div13 && !in13k2));

  const bool prime_window = n > 3 && n <= kPrimeResultMaxN;
  const bool m_prime = nt::is_prime(m);
  const bool prime_rule = use_prime_result && prime_window && m_prime;

  SieveVerdict v;
  v.n = n;
  v.n2n1 = m;
  if (n == 1) {
    v.status = SieveStatus::Exists;
    v.reason = SieveReason::ExampleN1;
  } else if (n == 2) {
    v.status = SieveStatus::Exists;
    v.reason = SieveReason::ExampleN2;
  } else if (mod6_rule) {
    v.status = SieveStatus::Excluded;
    v.reason = SieveReason::ThmMainMod6;
  } else if (prop_rule) {
    v.status = SieveStatus::Excluded;
    v.reason = SieveReason::PropKnown;
  } else if (prime_rule) {
    v.status = SieveStatus::Excluded;
    v.reason = SieveReason::PrimeResult;
  }

  std::ostringstream d;
  d << "mod6=" << mod6 << ";mod6_rule=" << mod6_rule << ";sq8n7=" << sq << ";div=" << (divisors.empty() ? "-" : divisors)
    << ";div13=" << div13 << ";m13k2=" << in13k2 << ";prop_rule=" << prop_rule << ";prime=" << m_prime
    << ";prime_window=" << prime_window << ";prime_toggle=" << use_prime_result << ";prime_rule=" << prime_rule;
  v.detail = d.str();
  return v;
}

SieveTable classify_range(std::int64_t lo, std::int64_t hi, bool use_prime_result, int threads) {
  if (lo < 1 || hi < lo || hi > kSieveRangeMax) throw std::out_of_range("classify_range: need 1 <= lo <= hi <= 10^7");
  if (threads < 1) throw std::invalid_argument("classify_range: thread count must be >= 1");

  SieveTable t;
  const auto count = static_cast<std::size_t>(hi - lo + 1);
  t.rows.resize(count);
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  const std::size_t chunk = (count + workers - 1) / workers;
  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) t.rows[i] = classify(lo + static_cast<std::int64_t>(i), use_prime_result);
  };
  if (workers == 1) {
    fill(0, count);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t b = w * chunk;
      const std::size_t e = std::min(count, b + chunk);
      if (b < e) pool.emplace_back(fill, b, e);
    }
    for (auto& th : pool) th.join();
  }

  for (const char* s : {"EXISTS", "EXCLUDED", "OPEN"}) t.status_histogram[s] = 0;
  for (const auto& r : t.rows) {
    ++t.status_histogram[to_string(r.status)];
    ++t.reason_histogram[to_string(r.reason)];
  }
  return t;
}

std::string to_csv(const SieveTable& table) {
  std::string out = "n,status,reason,n2n1,trace\n";
  for (const auto& r : table.rows) {
    out += std::to_string(r.n) + ',' + to_string(r.status) + ',' + to_string(r.reason) + ',' + std::to_string(r.n2n1) +
           ',' + r.detail + '\n';
  }
  return out;
}

}  // namespace apll
