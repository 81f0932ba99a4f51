#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apll/abelian_group.hpp"
#include "apll/apll_core.hpp"

namespace apll {

struct SearchConfig {
  int n = 1;
  /// Abandon a branch as soon as a partial coefficient exceeds its ceiling.
  bool prune_partial = true;
  /// Run the necessary-condition battery on the split of every complete candidate.
  bool prune_battery = true;
  bool dedupe_orbits = true;
  /// Work budget in search nodes (partial and complete candidates), per first-pair task.
  /// A task that runs out is dropped and the result is flagged incomplete.
  std::uint64_t max_candidates = 2'000'000'000ULL;
  int thread_partitions = 1;
};

struct SearchResult {
  GroupSpec group;
  std::vector<CodeCandidate> solutions;              // canonical order
  std::vector<CodeCandidate> orbit_representatives;  // canonical order
  std::uint64_t candidates_examined = 0;             // complete candidates evaluated
  std::uint64_t nodes_visited = 0;
  std::uint64_t battery_rejections = 0;
  /// Complete candidates that passed the battery but failed the identity.
  std::uint64_t battery_passed_non_solutions = 0;
  bool complete = true;
  bool orbit_dedup_applied = false;
  std::vector<std::string> warnings;
};

/// One result per abelian group of order 2(n^2+n+1).
std::vector<SearchResult> search_codes(const SearchConfig& cfg);

/// Search inside a single group G of order 2(n^2+n+1).
SearchResult search_codes_in(const GroupSpec& g, const SearchConfig& cfg);

struct SplitSearchResult {
  GroupSpec subgroup;
  std::vector<SplitCandidate> solutions;  // ordered by (t0, t1)
  std::uint64_t candidates_examined = 0;
  std::uint64_t nodes_visited = 0;
  bool complete = true;
};

/// Backtracking over inverse-closed T0 and then T1 in H of order n^2+n+1,
/// with |T0|, |T1| fixed by the parity of n.
SplitSearchResult search_splits(const GroupSpec& h, int n, const SearchConfig& cfg);

struct OrbitRep {
  CodeCandidate representative;
  /// False for non-cyclic groups, where power maps do not exhaust Aut(G)
  /// and the input is returned unchanged.
  bool dedup_applied = false;
};

/// Lexicographically least image of c under the power automorphisms of G.
OrbitRep canonical_orbit_rep(const GroupSpec& g, const CodeCandidate& c);

}  // namespace apll
