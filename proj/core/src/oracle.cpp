#include "ordmatch/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <optional>
#include <thread>

#include "ordmatch/bounds.hpp"
#include "ordmatch/build.hpp"

namespace ordmatch {

BigInt matching_count(int n, int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("matching_count: n, r must be >= 1");
  // (rn)! / ((r!)^n * n!)
  BigInt num = factorial(static_cast<unsigned>(r) * static_cast<unsigned>(n));
  BigInt den = big_pow(factorial(static_cast<unsigned>(r)), static_cast<unsigned>(n)) *
               factorial(static_cast<unsigned>(n));
  return num / den;
}

BudgetExceededError::BudgetExceededError(BigInt count, const BigInt& budget)
    : std::runtime_error("enumeration of " + count.str() +
                         " matchings exceeds budget " + budget.str()),
      count_(std::move(count)) {}

namespace {

// canonical recursion: match the smallest free vertex with every
// lexicographic choice of r-1 partners among the later free vertices
class Enumerator {
 public:
  Enumerator(int n, int r) : n_(n), r_(r), total_(n * r), used_(static_cast<size_t>(total_ + 1), 0) {
    edges_.assign(static_cast<size_t>(n), std::vector<std::int64_t>(static_cast<size_t>(r)));
  }

  // visit(depth) callbacks get the full edge buffer; returns false to stop
  bool run(const std::function<bool(const std::vector<std::vector<std::int64_t>>&)>& cb) {
    cb_ = &cb;
    return rec(0);
  }

 private:
  bool rec(int k) {
    if (k == n_) return (*cb_)(edges_);
    int v = 1;
    while (used_[static_cast<size_t>(v)]) ++v;
    auto& edge = edges_[static_cast<size_t>(k)];
    edge[0] = v;
    used_[static_cast<size_t>(v)] = 1;
    const bool ok = pick(k, 1, v + 1);
    used_[static_cast<size_t>(v)] = 0;
    return ok;
  }

  bool pick(int k, int filled, int from) {
    if (filled == r_) return rec(k + 1);
    auto& edge = edges_[static_cast<size_t>(k)];
    for (int v = from; v <= total_; ++v) {
      if (used_[static_cast<size_t>(v)]) continue;
      edge[static_cast<size_t>(filled)] = v;
      used_[static_cast<size_t>(v)] = 1;
      if (!pick(k, filled + 1, v + 1)) {
        used_[static_cast<size_t>(v)] = 0;
        return false;
      }
      used_[static_cast<size_t>(v)] = 0;
    }
    return true;
  }

  int n_, r_, total_;
  std::vector<char> used_;
  std::vector<std::vector<std::int64_t>> edges_;
  const std::function<bool(const std::vector<std::vector<std::int64_t>>&)>* cb_ = nullptr;
};

}  // namespace

void enumerate_matchings(
    int n, int r,
    const std::function<bool(const std::vector<std::vector<std::int64_t>>&)>& cb,
    const BigInt& budget) {
  const BigInt count = matching_count(n, r);
  if (count > budget) throw BudgetExceededError(count, budget);
  Enumerator(n, r).run(cb);
}

namespace {

// incremental pairwise-pattern state for the exact search; edge count <= 32
class PruningSearch {
 public:
  PruningSearch(int n, int r)
      : n_(n), r_(r), patterns_(all_patterns(r)) {
    for (size_t i = 0; i < patterns_.size(); ++i) pattern_index_.emplace(patterns_[i], i);
    adj_.assign(patterns_.size(), std::vector<std::uint32_t>(static_cast<size_t>(n), 0));
    pat_of_pair_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
  }

  // true when the edge at index k forms, within pattern p, a clique of size
  // >= need together with earlier edges
  bool creates_clique(int k, int need) const {
    if (need <= 1) return true;
    for (size_t p = 0; p < adj_.size(); ++p)
      if (has_clique(adj_[p], adj_[p][static_cast<size_t>(k)], need - 1)) return true;
    return false;
  }

  void add_edge(int k, const std::vector<std::vector<std::int64_t>>& edges) {
    for (int i = 0; i < k; ++i) {
      const Pattern p = pattern_of_pair(edges[static_cast<size_t>(i)],
                                        edges[static_cast<size_t>(k)]);
      const int pi = static_cast<int>(pattern_index_.at(p));
      pat_of_pair_[static_cast<size_t>(i)][static_cast<size_t>(k)] = pi;
      adj_[static_cast<size_t>(pi)][static_cast<size_t>(i)] |= 1u << k;
      adj_[static_cast<size_t>(pi)][static_cast<size_t>(k)] |= 1u << i;
    }
  }

  void remove_edge(int k) {
    for (int i = 0; i < k; ++i) {
      const int pi = pat_of_pair_[static_cast<size_t>(i)][static_cast<size_t>(k)];
      if (pi < 0) continue;
      adj_[static_cast<size_t>(pi)][static_cast<size_t>(i)] &= ~(1u << k);
      adj_[static_cast<size_t>(pi)][static_cast<size_t>(k)] = 0;
      pat_of_pair_[static_cast<size_t>(i)][static_cast<size_t>(k)] = -1;
    }
  }

  // overall clique number of the complete matching currently loaded
  int clique_number(int edge_count) const {
    const std::uint32_t full =
        edge_count == 32 ? ~0u : ((1u << edge_count) - 1u);
    int best = 1;
    for (const auto& rows : adj_)
      while (has_clique(rows, full, best + 1)) ++best;
    return best;
  }

 private:
  static bool has_clique(const std::vector<std::uint32_t>& rows, std::uint32_t cand,
                         int need) {
    if (need <= 0) return true;
    while (cand != 0) {
      if (__builtin_popcount(cand) < need) return false;
      const int v = __builtin_ctz(cand);
      cand &= cand - 1;
      if (has_clique(rows, cand & rows[static_cast<size_t>(v)], need - 1)) return true;
    }
    return false;
  }

  int n_, r_;
  std::vector<Pattern> patterns_;
  std::map<Pattern, size_t> pattern_index_;
  std::vector<std::vector<std::uint32_t>> adj_;   // per pattern, per edge bitmask
  std::vector<std::vector<int>> pat_of_pair_;
};

class RamseySearch {
 public:
  RamseySearch(int n, int r) : n_(n), r_(r), total_(n * r), state_(n, r),
                               used_(static_cast<size_t>(total_ + 1), 0) {
    edges_.assign(static_cast<size_t>(n), std::vector<std::int64_t>(static_cast<size_t>(r)));
  }

  RamseyResult run() {
    // seed the running minimum with genuine instances so pruning bites early
    std::optional<Matching> best_witness;
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const Matching m = random_matching(n_, r_, seed);
      const int l = full_report(m).best_size;
      if (!best_witness || l < best_) {
        best_ = l;
        best_witness = m;
      }
    }
    rec(0);
    return RamseyResult{best_, best_witness_ ? *best_witness_ : *best_witness};
  }

 private:
  void rec(int k) {
    if (k == n_) {
      const int l = state_.clique_number(n_);
      if (l < best_) {
        best_ = l;
        best_witness_ = Matching(r_, edges_);
      }
      return;
    }
    int v = 1;
    while (used_[static_cast<size_t>(v)]) ++v;
    edges_[static_cast<size_t>(k)][0] = v;
    used_[static_cast<size_t>(v)] = 1;
    pick(k, 1, v + 1);
    used_[static_cast<size_t>(v)] = 0;
  }

  void pick(int k, int filled, int from) {
    if (filled == r_) {
      state_.add_edge(k, edges_);
      // a partial matching already holding a best_-clique cannot improve
      if (!state_.creates_clique(k, best_)) rec(k + 1);
      state_.remove_edge(k);
      return;
    }
    auto& edge = edges_[static_cast<size_t>(k)];
    for (int v = from; v <= total_; ++v) {
      if (used_[static_cast<size_t>(v)]) continue;
      edge[static_cast<size_t>(filled)] = v;
      used_[static_cast<size_t>(v)] = 1;
      pick(k, filled + 1, v + 1);
      used_[static_cast<size_t>(v)] = 0;
    }
  }

  int n_, r_, total_;
  PruningSearch state_;
  std::vector<char> used_;
  std::vector<std::vector<std::int64_t>> edges_;
  int best_ = std::numeric_limits<int>::max();
  std::optional<Matching> best_witness_;
};

}  // namespace

RamseyResult exact_ramsey(int n, int r, const BigInt& budget) {
  if (n < 1 || r < 1) throw std::invalid_argument("exact_ramsey: n, r must be >= 1");
  if (n > 32) throw std::invalid_argument("exact_ramsey: edge count above 32 unsupported");
  const BigInt count = matching_count(n, r);
  if (count > budget) throw BudgetExceededError(count, budget);
  return RamseySearch(n, r).run();
}

std::vector<SweepRow> sweep_check(const std::vector<Matching>& instances, int threads) {
  if (threads < 1) threads = 1;
  std::vector<SweepRow> rows(instances.size());
  std::atomic<size_t> cursor{0};
  auto worker = [&]() {
    for (;;) {
      const size_t k = cursor.fetch_add(1);
      if (k >= instances.size()) break;
      const Matching& m = instances[k];
      const CliqueReport rep = full_report(m);
      std::map<Pattern, std::int64_t> caps;
      for (const auto& [p, entry] : rep.cliques)
        if (is_collectable(p)) caps.emplace(p, entry.size);
      const BudgetTable budgets(m.r(), std::move(caps));
      SweepRow row;
      row.index = static_cast<int>(k);
      row.n = m.n();
      row.upper = upper_bound_value(m.r(), budgets);
      auto [lower, chain] = lower_bound_value(m.r(), budgets);
      row.lower = lower;
      row.built = build_extremal(chain, budgets).n();
      row.pass = BigInt(m.n()) <= row.upper && BigInt(row.built) >= row.lower;
      rows[k] = std::move(row);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const int workers = std::min<int>(threads, static_cast<int>(instances.size()));
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return rows;
}

std::string sweep_row_tsv_header() { return "index\tn\tupper\tlower\tbuilt\tpass"; }

std::string sweep_row_tsv(const SweepRow& row) {
  return std::to_string(row.index) + '\t' + std::to_string(row.n) + '\t' +
         row.upper.str() + '\t' + row.lower.str() + '\t' + std::to_string(row.built) +
         '\t' + (row.pass ? "pass" : "FAIL");
}

}  // namespace ordmatch
