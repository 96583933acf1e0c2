#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ordmatch/bigint.hpp"
#include "ordmatch/partition.hpp"
#include "ordmatch/pattern.hpp"

namespace ordmatch {

// Per-pattern clique budgets m_P >= 1.  Keys are collectable patterns of one
// fixed uniformity.
class BudgetTable {
 public:
  BudgetTable(int r, std::map<Pattern, std::int64_t> caps);

  // m_P = m for every collectable r-pattern.
  static BudgetTable uniform(int r, std::int64_t m);

  int uniformity() const { return r_; }
  const std::map<Pattern, std::int64_t>& caps() const { return caps_; }
  bool has(const Pattern& p) const { return caps_.count(p) != 0; }
  std::int64_t at(const Pattern& p) const;  // missing-pattern error

 private:
  int r_;
  std::map<Pattern, std::int64_t> caps_;
};

// Union of patterns_of over every level of the chain, sorted, duplicate-free;
// cardinality 2^r - 1.
std::vector<Pattern> chain_pattern_set(const PartitionChain& chain);

// Product of m_P over patterns_of(lambda).
BigInt level_product(const OrderedPartition& lambda, const BudgetTable& budgets);

// Sum over all maximal chains descending from lambda of the product of m_P
// over the union of the chain's pattern sets (lambda's own level included).
BigInt chain_products_from(const OrderedPartition& lambda, const BudgetTable& budgets);

// 2^(r-1) * sum over maximal chains of the chain-set budget product.
// Budgets must cover every collectable r-pattern.
BigInt upper_bound_value(int r, const BudgetTable& budgets);

// Maximum over maximal chains of the chain-set budget product, with the first
// maximizing chain in chains(r) order.
std::pair<BigInt, PartitionChain> lower_bound_value(int r, const BudgetTable& budgets);

// 2^(r-1) * (r-1)!
BigInt chain_count_constant(int r);

// chain_count_constant(r)^(-1/(2^r - 1)); tends to 1 as r grows.
double sharpness_constant(int r);

}  // namespace ordmatch
