#include "ordmatch/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ordmatch {

BudgetTable::BudgetTable(int r, std::map<Pattern, std::int64_t> caps)
    : r_(r), caps_(std::move(caps)) {
  if (r_ < 1) throw std::invalid_argument("BudgetTable: r < 1");
  for (const auto& [p, m] : caps_) {
    if (p.uniformity() != r_)
      throw std::invalid_argument("BudgetTable: pattern " + p.word() +
                                  " has wrong uniformity");
    if (!is_collectable(p))
      throw std::invalid_argument("BudgetTable: pattern " + p.word() +
                                  " has no block partition");
    if (m < 1) throw std::invalid_argument("BudgetTable: budget < 1");
  }
}

BudgetTable BudgetTable::uniform(int r, std::int64_t m) {
  std::map<Pattern, std::int64_t> caps;
  for (const Pattern& p : collectable_patterns(r)) caps.emplace(p, m);
  return BudgetTable(r, std::move(caps));
}

std::int64_t BudgetTable::at(const Pattern& p) const {
  auto it = caps_.find(p);
  if (it == caps_.end())
    throw std::invalid_argument("BudgetTable: no budget for pattern " + p.word());
  return it->second;
}

std::vector<Pattern> chain_pattern_set(const PartitionChain& chain) {
  std::vector<Pattern> out;
  for (const OrderedPartition& lv : chain.levels())
    for (const Pattern& p : patterns_of(lv)) out.push_back(p);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BigInt level_product(const OrderedPartition& lambda, const BudgetTable& budgets) {
  BigInt prod = 1;
  for (const Pattern& p : patterns_of(lambda)) prod *= budgets.at(p);
  return prod;
}

BigInt chain_products_from(const OrderedPartition& lambda, const BudgetTable& budgets) {
  if (lambda.total() != budgets.uniformity())
    throw std::invalid_argument("chain_products_from: partition/budget mismatch");
  std::map<OrderedPartition, BigInt> memo;
  auto rec = [&](auto&& self, const OrderedPartition& lv) -> BigInt {
    auto it = memo.find(lv);
    if (it != memo.end()) return it->second;
    BigInt below = 0;
    const auto refs = one_split_refinements(lv);
    if (refs.empty()) {
      below = 1;  // bottom level (1,...,1)
    } else {
      for (const OrderedPartition& nxt : refs) below += self(self, nxt);
    }
    BigInt val = level_product(lv, budgets) * below;
    memo.emplace(lv, val);
    return val;
  };
  return rec(rec, lambda);
}

static void require_full_coverage(int r, const BudgetTable& budgets) {
  if (budgets.uniformity() != r)
    throw std::invalid_argument("budget table uniformity mismatch");
  for (const Pattern& p : collectable_patterns(r)) (void)budgets.at(p);
}

BigInt upper_bound_value(int r, const BudgetTable& budgets) {
  require_full_coverage(r, budgets);
  return big_pow(2, static_cast<unsigned>(r - 1)) *
         chain_products_from(OrderedPartition::whole(r), budgets);
}

std::pair<BigInt, PartitionChain> lower_bound_value(int r, const BudgetTable& budgets) {
  require_full_coverage(r, budgets);
  const std::vector<PartitionChain> all = chains(r);
  BigInt best = -1;
  const PartitionChain* best_chain = nullptr;
  for (const PartitionChain& c : all) {
    BigInt prod = 1;
    for (const Pattern& p : chain_pattern_set(c)) prod *= budgets.at(p);
    if (prod > best) {  // strict: first maximizer in chains(r) order wins
      best = prod;
      best_chain = &c;
    }
  }
  return {best, *best_chain};
}

BigInt chain_count_constant(int r) {
  if (r < 1) throw std::invalid_argument("chain_count_constant: r < 1");
  return big_pow(2, static_cast<unsigned>(r - 1)) * factorial(static_cast<unsigned>(r - 1));
}

double sharpness_constant(int r) {
  if (r < 1) throw std::invalid_argument("sharpness_constant: r < 1");
  // C^(-1/(2^r - 1)) computed in logs: C = 2^(r-1) * (r-1)!
  const double log_c = (r - 1) * std::log(2.0) + std::lgamma(static_cast<double>(r));
  const double denom = std::pow(2.0, r) - 1.0;
  return std::exp(-log_c / denom);
}

}  // namespace ordmatch
