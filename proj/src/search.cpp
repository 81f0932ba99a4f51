#include "apll/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace apll {

namespace {

// Group arithmetic on canonical element indices, tabulated for small groups.
class IndexArith {
 public:
  explicit IndexArith(GroupSpec g) : g_(std::move(g)), order_(g_.order()) {
    elements_ = g_.elements();
    inverse_.resize(static_cast<std::size_t>(order_));
    for (std::int64_t i = 0; i < order_; ++i) {
      inverse_[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(g_.index_of(inverse(g_, elements_[i])));
    }
    if (order_ <= kTableLimit) {
      table_.resize(static_cast<std::size_t>(order_ * order_));
      for (std::int64_t a = 0; a < order_; ++a) {
        for (std::int64_t b = 0; b < order_; ++b) {
          table_[static_cast<std::size_t>(a * order_ + b)] =
              static_cast<std::int32_t>(g_.index_of(op(g_, elements_[a], elements_[b])));
        }
      }
    }
  }

  std::int64_t order() const { return order_; }
  const GroupSpec& group() const { return g_; }
  const GroupElement& element(std::int64_t i) const { return elements_[static_cast<std::size_t>(i)]; }
  std::int32_t inv(std::int32_t a) const { return inverse_[static_cast<std::size_t>(a)]; }
  std::int32_t add(std::int32_t a, std::int32_t b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a * order_ + b)];
    return static_cast<std::int32_t>(g_.index_of(op(g_, elements_[a], elements_[b])));
  }

  /// Inverse pairs {x, x^-1} of elements other than e and the involutions,
  /// ordered by the smaller index.
  std::vector<std::pair<std::int32_t, std::int32_t>> inverse_pairs() const {
    std::vector<std::pair<std::int32_t, std::int32_t>> out;
    for (std::int32_t x = 1; x < order_; ++x) {
      const std::int32_t y = inv(x);
      if (x < y) out.emplace_back(x, y);
    }
    return out;
  }

 private:
  static constexpr std::int64_t kTableLimit = 2048;
  GroupSpec g_;
  std::int64_t order_;
  std::vector<GroupElement> elements_;
  std::vector<std::int32_t> inverse_;
  std::vector<std::int32_t> table_;
};

struct TaskOutcome {
  std::vector<CodeCandidate> solutions;
  std::uint64_t examined = 0;
  std::uint64_t nodes = 0;
  std::uint64_t battery_rejections = 0;
  std::uint64_t battery_passed_non_solutions = 0;
  bool aborted = false;
  std::exception_ptr error;
};

// Depth-first search over n inverse pairs, keeping the coefficients of
// T^2 + T^(2) current. The target is 2 everywhere off e except 0 at f, and
// every pair adds in steps of 2, so any coefficient above 2 (or positive at
// f) is final.
class CodeSearcher {
 public:
  CodeSearcher(const IndexArith& ar, const SearchConfig& cfg, std::int32_t f)
      : ar_(ar), cfg_(cfg), f_(f), pairs_(ar.inverse_pairs()), coeff_(static_cast<std::size_t>(ar.order()), 0) {}

  std::size_t pair_count() const { return pairs_.size(); }

  TaskOutcome run_task(std::size_t first) {
    TaskOutcome out;
    members_.assign(1, 0);
    std::fill(coeff_.begin(), coeff_.end(), 0);
    out_ = &out;
    try {
      descend(first, 0);
    } catch (const Abort&) {
      out.aborted = true;
    }
    out_ = nullptr;
    return out;
  }

 private:
  struct Abort {};

  // Returns false when the pair conflicts (only reported when pruning).
  bool push_pair(std::size_t p, std::vector<std::int32_t>& touched) {
    const auto [x, y] = pairs_[p];
    bool ok = true;
    auto bump = [&](std::int32_t t) {
      if (t == 0) return;
      coeff_[static_cast<std::size_t>(t)] += 2;
      touched.push_back(t);
      if (t == f_ || coeff_[static_cast<std::size_t>(t)] > 2) ok = false;
    };
    for (std::int32_t m : members_) {
      bump(ar_.add(x, m));
      bump(ar_.add(y, m));
    }
    bump(ar_.add(x, x));
    bump(ar_.add(y, y));
    members_.push_back(x);
    members_.push_back(y);
    return ok;
  }

  void pop_pair(const std::vector<std::int32_t>& touched) {
    for (std::int32_t t : touched) coeff_[static_cast<std::size_t>(t)] -= 2;
    members_.resize(members_.size() - 2);
  }

  void descend(std::size_t p, int depth) {
    std::vector<std::int32_t> touched;
    touched.reserve(members_.size() * 2 + 2);
    if (++out_->nodes > cfg_.max_candidates) throw Abort{};
    const bool ok = push_pair(p, touched);
    if (ok || !cfg_.prune_partial) {
      if (depth + 1 == cfg_.n) {
        leaf();
      } else {
        const std::size_t remaining = static_cast<std::size_t>(cfg_.n - depth - 1);
        for (std::size_t q = p + 1; q + remaining <= pairs_.size(); ++q) descend(q, depth + 1);
      }
    }
    pop_pair(touched);
  }

  void leaf() {
    ++out_->examined;
    bool exact = coeff_[static_cast<std::size_t>(f_)] == 0;
    for (std::int32_t t = 1; exact && t < ar_.order(); ++t) {
      if (t != f_ && coeff_[static_cast<std::size_t>(t)] != 2) exact = false;
    }
    std::vector<GroupElement> elems;
    elems.reserve(members_.size());
    for (std::int32_t m : members_) elems.push_back(ar_.element(m));
    CodeCandidate c = make_code_candidate(ar_.group(), cfg_.n, std::move(elems));

    if (cfg_.prune_battery) {
      const bool battery = necessary_battery(split_code(c)).all();
      if (!battery) {
        ++out_->battery_rejections;
        if (exact) throw std::logic_error("battery rejected a candidate satisfying the identity");
        return;
      }
      if (!exact) ++out_->battery_passed_non_solutions;
    }
    if (!exact) return;
    if (!verify_code(c).holds) throw std::logic_error("incremental check and verify_code disagree");
    out_->solutions.push_back(std::move(c));
  }

  const IndexArith& ar_;
  const SearchConfig& cfg_;
  std::int32_t f_;
  std::vector<std::pair<std::int32_t, std::int32_t>> pairs_;
  std::vector<int> coeff_;
  std::vector<std::int32_t> members_;
  TaskOutcome* out_ = nullptr;
};

template <typename Task>
void run_tasks(std::size_t count, int threads, Task&& task) {
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(count)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) task(i);
  };
  if (workers == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

void validate_config(const SearchConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("search: n must be >= 1");
  if (cfg.max_candidates == 0) throw std::invalid_argument("search: budget must be positive");
  if (cfg.thread_partitions < 1) throw std::invalid_argument("search: thread count must be >= 1");
}

}  // namespace

OrbitRep canonical_orbit_rep(const GroupSpec& g, const CodeCandidate& c) {
  if (!g.is_cyclic()) return OrbitRep{c, false};
  std::vector<GroupElement> best = c.elements;
  for (std::int64_t t : power_automorphisms(g)) {
    std::vector<GroupElement> img;
    img.reserve(c.elements.size());
    for (const auto& x : c.elements) img.push_back(power(g, x, t));
    std::sort(img.begin(), img.end());
    if (img < best) best = std::move(img);
  }
  return OrbitRep{CodeCandidate{g, c.n, std::move(best)}, true};
}

SearchResult search_codes_in(const GroupSpec& g, const SearchConfig& cfg) {
  validate_config(cfg);
  const std::int64_t n = cfg.n;
  if (g.order() != 2 * (n * n + n + 1)) {
    throw std::invalid_argument("search: group " + g.to_string() + " does not have order 2(n^2+n+1)");
  }
  const IndexArith ar(g);
  const auto f = static_cast<std::int32_t>(g.index_of(unique_involution(g)));

  SearchResult res;
  res.group = g;
  const std::size_t pair_count = ar.inverse_pairs().size();
  const std::size_t tasks = pair_count >= static_cast<std::size_t>(cfg.n) ? pair_count - cfg.n + 1 : 0;
  std::vector<TaskOutcome> outcomes(tasks);
  run_tasks(tasks, cfg.thread_partitions, [&](std::size_t i) {
    try {
      CodeSearcher searcher(ar, cfg, f);
      outcomes[i] = searcher.run_task(i);
    } catch (...) {
      outcomes[i].error = std::current_exception();
    }
  });

  for (auto& o : outcomes) {
    if (o.error) std::rethrow_exception(o.error);
    res.candidates_examined += o.examined;
    res.nodes_visited += o.nodes;
    res.battery_rejections += o.battery_rejections;
    res.battery_passed_non_solutions += o.battery_passed_non_solutions;
    if (o.aborted) {
      res.complete = false;
      continue;
    }
    for (auto& s : o.solutions) res.solutions.push_back(std::move(s));
  }
  std::sort(res.solutions.begin(), res.solutions.end(),
            [](const CodeCandidate& a, const CodeCandidate& b) { return a.elements < b.elements; });
  if (!res.complete) res.warnings.push_back("budget exhausted: some branches were not explored");

  if (cfg.dedupe_orbits) {
    if (g.is_cyclic()) {
      res.orbit_dedup_applied = true;
      for (const auto& s : res.solutions) res.orbit_representatives.push_back(canonical_orbit_rep(g, s).representative);
      std::sort(res.orbit_representatives.begin(), res.orbit_representatives.end(),
                [](const CodeCandidate& a, const CodeCandidate& b) { return a.elements < b.elements; });
      res.orbit_representatives.erase(
          std::unique(res.orbit_representatives.begin(), res.orbit_representatives.end(),
                      [](const CodeCandidate& a, const CodeCandidate& b) { return a.elements == b.elements; }),
          res.orbit_representatives.end());
    } else {
      res.warnings.push_back("non-cyclic group " + g.to_string() +
                             ": power maps do not cover Aut(G), orbit deduplication skipped");
      res.orbit_representatives = res.solutions;
    }
  } else {
    res.orbit_representatives = res.solutions;
  }
  return res;
}

std::vector<SearchResult> search_codes(const SearchConfig& cfg) {
  validate_config(cfg);
  const std::int64_t n = cfg.n;
  std::vector<SearchResult> out;
  for (const auto& g : enumerate_abelian_groups(2 * (n * n + n + 1))) out.push_back(search_codes_in(g, cfg));
  return out;
}

namespace {

// Backtracking for (T0, T1) in H. Coefficient ceilings: T0 T1 is at most 1
// off e and 0 at e; T0^2 + T1^2 + T0^(2) + T1^(2) is at most 2 off e.
class SplitSearcher {
 public:
  SplitSearcher(const IndexArith& ar, const SearchConfig& cfg, int pairs0, int pairs1)
      : ar_(ar),
        cfg_(cfg),
        pairs_(ar.inverse_pairs()),
        pairs0_(pairs0),
        pairs1_(pairs1),
        sq_(static_cast<std::size_t>(ar.order()), 0),
        prod_(static_cast<std::size_t>(ar.order()), 0),
        used_(pairs_.size(), false) {}

  SplitSearchResult run() {
    SplitSearchResult res;
    res.subgroup = ar_.group();
    t0_.assign(1, 0);
    res_ = &res;
    try {
      phase0(0, 0);
    } catch (const Abort&) {
      res.complete = false;
    }
    std::sort(res.solutions.begin(), res.solutions.end(), [](const SplitCandidate& a, const SplitCandidate& b) {
      return std::tie(a.t0, a.t1) < std::tie(b.t0, b.t1);
    });
    return res;
  }

 private:
  struct Abort {};
  struct Touch {
    std::int32_t idx;
    bool product;
    int delta;
  };

  bool push(std::size_t p, bool into_t1, std::vector<Touch>& touched) {
    const auto [x, y] = pairs_[p];
    bool ok = true;
    auto bump_sq = [&](std::int32_t t) {
      if (t == 0) return;
      sq_[static_cast<std::size_t>(t)] += 2;
      touched.push_back({t, false, 2});
      if (sq_[static_cast<std::size_t>(t)] > 2) ok = false;
    };
    auto bump_prod = [&](std::int32_t t) {
      prod_[static_cast<std::size_t>(t)] += 1;
      touched.push_back({t, true, 1});
      if (prod_[static_cast<std::size_t>(t)] > (t == 0 ? 0 : 1)) ok = false;
    };
    auto& same = into_t1 ? t1_ : t0_;
    auto& other = into_t1 ? t0_ : t1_;
    for (std::int32_t m : same) {
      bump_sq(ar_.add(x, m));
      bump_sq(ar_.add(y, m));
    }
    bump_sq(ar_.add(x, x));
    bump_sq(ar_.add(y, y));
    for (std::int32_t m : other) {
      bump_prod(ar_.add(x, m));
      bump_prod(ar_.add(y, m));
    }
    same.push_back(x);
    same.push_back(y);
    used_[p] = true;
    return ok;
  }

  void pop(std::size_t p, bool into_t1, const std::vector<Touch>& touched) {
    for (const auto& t : touched) (t.product ? prod_ : sq_)[static_cast<std::size_t>(t.idx)] -= t.delta;
    auto& same = into_t1 ? t1_ : t0_;
    same.resize(same.size() - 2);
    used_[p] = false;
  }

  void tick() {
    if (++res_->nodes_visited > cfg_.max_candidates) throw Abort{};
  }

  void phase0(std::size_t start, int depth) {
    if (depth == pairs0_) {
      phase1(0, 0);
      return;
    }
    for (std::size_t p = start; p < pairs_.size(); ++p) {
      tick();
      std::vector<Touch> touched;
      if (push(p, false, touched) || !cfg_.prune_partial) phase0(p + 1, depth + 1);
      pop(p, false, touched);
    }
  }

  void phase1(std::size_t start, int depth) {
    if (depth == pairs1_) {
      leaf();
      return;
    }
    for (std::size_t p = start; p < pairs_.size(); ++p) {
      if (used_[p]) continue;
      tick();
      std::vector<Touch> touched;
      if (push(p, true, touched) || !cfg_.prune_partial) phase1(p + 1, depth + 1);
      pop(p, true, touched);
    }
  }

  void leaf() {
    ++res_->candidates_examined;
    std::vector<GroupElement> a, b;
    for (std::int32_t m : t0_) a.push_back(ar_.element(m));
    for (std::int32_t m : t1_) b.push_back(ar_.element(m));
    SplitCandidate s = make_split_candidate(ar_.group(), cfg_.n, std::move(a), std::move(b));
    if (verify_split(s).holds) res_->solutions.push_back(std::move(s));
  }

  const IndexArith& ar_;
  const SearchConfig& cfg_;
  std::vector<std::pair<std::int32_t, std::int32_t>> pairs_;
  int pairs0_, pairs1_;
  std::vector<int> sq_, prod_;
  std::vector<bool> used_;
  std::vector<std::int32_t> t0_, t1_;
  SplitSearchResult* res_ = nullptr;
};

}  // namespace

SplitSearchResult search_splits(const GroupSpec& h, int n, const SearchConfig& cfg) {
  validate_config(cfg);
  const std::int64_t nn = n;
  if (n < 1 || h.order() != nn * nn + nn + 1) {
    throw std::invalid_argument("search_splits: subgroup " + h.to_string() + " does not have order n^2+n+1");
  }
  const int k0 = n % 2 == 1 ? n : n + 1;
  const int k1 = 2 * n + 1 - k0;
  SearchConfig local = cfg;
  local.n = n;
  const IndexArith ar(h);
  SplitSearcher searcher(ar, local, (k0 - 1) / 2, k1 / 2);
  return searcher.run();
}

}  // namespace apll
