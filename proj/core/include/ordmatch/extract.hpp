#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ordmatch/bigint.hpp"
#include "ordmatch/bounds.hpp"
#include "ordmatch/matching.hpp"
#include "ordmatch/pointset.hpp"

namespace ordmatch {

// Size thresholds steering the dichotomy at a partition lambda with s parts:
// one entry per one-split refinement lambda', each worth
// 2^(r-s-1) * chain_products_from(lambda'), plus their sum (the degree bound).
struct PartitionBudgets {
  OrderedPartition base;
  std::map<OrderedPartition, BigInt> caps;
  BigInt total;
};

PartitionBudgets inductive_budgets(const OrderedPartition& lambda,
                                   const BudgetTable& budgets);

struct TraceStep {
  OrderedPartition parts;
  char branch = '?';  // 'b' = refined, 'a' = independent-set, 'p' = projection
  int in_size = 0;
  int out_size = 0;
  std::optional<OrderedPartition> refined;
};

struct DichotomyOutcome {
  bool interval_wise = false;      // true: branch (a); false: branch (b)
  std::vector<int> edges;          // 0-based indices into the matching
  PartiteWitness witness;          // (a): input witness; (b): refined witness
};

// Branch (b) first: sweep split thresholds v + 1/2 inside each part (parts
// ascending, thresholds ascending, left count j ascending) and return the
// first sub-collection exceeding its budget, as a lambda'-partite witness.
// Otherwise branch (a): greedy minimum-degree independent set (ties by lowest
// edge index) in the conflict graph of intersecting part hulls; the result is
// interval-wise and has size >= ceil(|edges| / (2 * budgets.total)).
// Both outcomes are re-verified before returning.
DichotomyOutcome dichotomy(const Matching& m, const std::vector<int>& edges,
                           const PartiteWitness& w, const PartitionBudgets& budgets);
DichotomyOutcome dichotomy(const Matching& m, const PartiteWitness& w,
                           const PartitionBudgets& budgets);

// Per-part minima of an interval-wise collection, one s-dimensional point per
// edge.  Errors unless the witness is valid and the collection interval-wise.
PointSet project_to_points(const Matching& m, const std::vector<int>& edges,
                           const PartiteWitness& w);
PointSet project_to_points(const Matching& m, const PartiteWitness& w);

struct ExtractionResult {
  Pattern pattern;
  std::vector<int> clique;  // 0-based edge indices, ascending; pairwise verified
  std::vector<TraceStep> trace;
};

// Recursive descent from lambda = (r) with uniform caps m: at most r-1
// dichotomies, then a projection and the best monotone sequence over all sign
// functions (ties: lexicographically smallest sign string).  Always returns
// the clique it found, pairwise verified.
ExtractionResult extract_best(const Matching& m, std::int64_t target_m);

// extract_best filtered by the guarantee: present iff the clique has size
// >= target_m + 1.  When |M| > chain_count_constant(r) * m^(2^r - 1) the
// result is always present.
std::optional<ExtractionResult> extract_clique(const Matching& m, std::int64_t target_m);

// chain_count_constant(r) * m^(2^r - 1).
BigInt uniform_size_bound(int r, std::int64_t m);

// Largest m + 1 such that n > uniform_size_bound(r, m); at least
// floor(n^(1/(2^r - 1)) / 2) for n >= 2.
std::int64_t guaranteed_size(int r, std::int64_t n);

nlohmann::json extraction_to_json(const ExtractionResult& res, bool include_trace);

}  // namespace ordmatch
