#include "ordmatch/build.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ordmatch/pattern.hpp"
#include "ordmatch/pointset.hpp"

namespace ordmatch {

Matching build_r_partite(int r, const BudgetTable& caps) {
  if (caps.uniformity() != r)
    throw std::invalid_argument("build_r_partite: budget uniformity mismatch");
  const OrderedPartition discrete = OrderedPartition::discrete(r);
  // caps must cover exactly the patterns with block half-lengths (1,...,1)
  std::map<SignFunction, int> tau_caps;
  size_t covered = 0;
  for (const SignFunction& tau : all_sign_functions(r)) {
    const Pattern p = pattern_from(discrete, tau);
    if (!caps.has(p))
      throw std::invalid_argument("build_r_partite: no cap for pattern " + p.word());
    const std::int64_t m = caps.at(p);
    if (m > (std::int64_t(1) << 30))
      throw std::invalid_argument("build_r_partite: cap too large");
    tau_caps.emplace(tau, static_cast<int>(m));
    ++covered;
  }
  if (caps.caps().size() != covered)
    throw std::invalid_argument("build_r_partite: caps outside the discrete level");
  const PointSet z = construct_point_set(r, tau_caps);
  // translate all coordinates positive, then spread parts N apart
  BigInt lo = z.point(0)[0];
  BigInt hi = lo;
  for (const auto& p : z.points())
    for (const BigInt& c : p) {
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
  const BigInt shift = 1 - lo;
  const BigInt big_n = hi + shift + 1;
  std::vector<std::vector<BigInt>> raw;
  raw.reserve(static_cast<size_t>(z.size()));
  for (const auto& p : z.points()) {
    std::vector<BigInt> e(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i)
      e[static_cast<size_t>(i)] = big_n * (i + 1) + p[static_cast<size_t>(i)] + shift;
    raw.push_back(std::move(e));
  }
  // rank-normalize the big labels down to {1..r*|Z|}
  std::vector<BigInt> all;
  all.reserve(raw.size() * static_cast<size_t>(r));
  for (const auto& e : raw)
    for (const BigInt& v : e) all.push_back(v);
  std::sort(all.begin(), all.end());
  std::vector<std::vector<std::int64_t>> edges;
  edges.reserve(raw.size());
  for (const auto& e : raw) {
    std::vector<std::int64_t> small(e.size());
    for (size_t i = 0; i < e.size(); ++i) {
      const auto it = std::lower_bound(all.begin(), all.end(), e[i]);
      small[i] = static_cast<std::int64_t>(it - all.begin()) + 1;
    }
    edges.push_back(std::move(small));
  }
  return Matching(r, std::move(edges));
}

Matching build_extremal(const PartitionChain& chain, const BudgetTable& budgets) {
  const int r = chain.uniformity();
  if (budgets.uniformity() != r)
    throw std::invalid_argument("build_extremal: budget uniformity mismatch");
  for (const Pattern& p : chain_pattern_set(chain)) (void)budgets.at(p);

  if (r == 1) {
    // single pattern AB: any m disjoint singletons pairwise realize it
    const std::int64_t m = budgets.at(Pattern("AB"));
    std::vector<std::vector<std::int64_t>> edges;
    for (std::int64_t v = 1; v <= m; ++v) edges.push_back({v});
    return Matching(1, std::move(edges));
  }

  // level r-1 has exactly one part of size 2; j is its element index
  const OrderedPartition& pre = chain.level(r - 1);
  int j = 0, acc = 0;
  for (int i = 1; i <= pre.size(); ++i) {
    if (pre.part(i) == 2) {
      j = acc + 1;
      break;
    }
    acc += pre.part(i);
  }
  if (j == 0) throw std::logic_error("build_extremal: no part of size 2 at level r-1");

  // reduced chain: merge elements j and j+1 (decrement the part holding j)
  std::vector<OrderedPartition> reduced_levels;
  for (int s = 1; s <= r - 1; ++s) {
    const OrderedPartition& lv = chain.level(s);
    std::vector<int> parts = lv.parts();
    int cum = 0;
    for (auto& p : parts) {
      if (j <= cum + p) {
        if (j + 1 > cum + p)
          throw std::logic_error("build_extremal: chain does not keep j, j+1 together");
        --p;
        break;
      }
      cum += p;
    }
    reduced_levels.push_back(OrderedPartition(std::move(parts)));
  }
  // caps transport along letter omission: m'_{P'} = m_{double_letters(P', j)}
  std::map<Pattern, std::int64_t> reduced_caps;
  for (int s = 1; s <= r - 1; ++s)
    for (const Pattern& q : patterns_of(reduced_levels[static_cast<size_t>(s - 1)]))
      reduced_caps.emplace(q, budgets.at(double_letters(q, j)));
  const Matching inner =
      build_extremal(PartitionChain(std::move(reduced_levels)),
                     BudgetTable(r - 1, std::move(reduced_caps)));

  // double the j-th element of every edge: scale labels by 2 and insert the
  // new vertex immediately before the copy
  std::vector<std::vector<std::int64_t>> doubled;
  doubled.reserve(static_cast<size_t>(inner.n()));
  for (const auto& e : inner.edges()) {
    std::vector<std::int64_t> out;
    out.reserve(e.size() + 1);
    for (size_t i = 0; i < e.size(); ++i) {
      if (static_cast<int>(i) == j - 1) out.push_back(2 * e[i] - 1);
      out.push_back(2 * e[i]);
    }
    doubled.push_back(std::move(out));
  }
  const Matching star(r, std::move(doubled));

  // discrete-level caps feed the r-partite layer
  std::map<Pattern, std::int64_t> disc_caps;
  for (const Pattern& p : patterns_of(OrderedPartition::discrete(r)))
    disc_caps.emplace(p, budgets.at(p));
  const Matching layer = build_r_partite(r, BudgetTable(r, std::move(disc_caps)));

  return blow_up(star, layer);
}

Matching build_uniform(int r, std::int64_t m) {
  return build_extremal(chains(r).front(), BudgetTable::uniform(r, m));
}

}  // namespace ordmatch
