#include "ordmatch/extract.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ordmatch/pattern.hpp"

namespace ordmatch {

namespace {

std::vector<int> all_indices(const Matching& m) {
  std::vector<int> idx(static_cast<size_t>(m.n()));
  for (int i = 0; i < m.n(); ++i) idx[static_cast<size_t>(i)] = i;
  return idx;
}

PartiteWitness trivial_witness(const Matching& m) {
  // every vertex of a normalized matching lies in (1/2, rn + 1/2)
  return PartiteWitness{OrderedPartition::whole(m.r()),
                        {0, static_cast<std::int64_t>(m.r()) * m.n()}};
}

// ceil(n / d) for positive BigInt d
int ceil_div_int(int n, const BigInt& d) {
  BigInt q = (BigInt(n) + d - 1) / d;
  return static_cast<int>(q);
}

}  // namespace

PartitionBudgets inductive_budgets(const OrderedPartition& lambda,
                                   const BudgetTable& budgets) {
  const int r = budgets.uniformity();
  if (lambda.total() != r)
    throw std::invalid_argument("inductive_budgets: partition/budget mismatch");
  const int s = lambda.size();
  if (s >= r)
    throw std::invalid_argument("inductive_budgets: partition already discrete");
  PartitionBudgets pb{lambda, {}, 0};
  const BigInt scale = big_pow(2, static_cast<unsigned>(r - s - 1));
  for (const OrderedPartition& next : one_split_refinements(lambda)) {
    BigInt cap = scale * chain_products_from(next, budgets);
    pb.total += cap;
    pb.caps.emplace(next, std::move(cap));
  }
  return pb;
}

DichotomyOutcome dichotomy(const Matching& m, const std::vector<int>& edges,
                           const PartiteWitness& w, const PartitionBudgets& budgets) {
  if (!(w.parts == budgets.base))
    throw std::invalid_argument("dichotomy: witness/budget partition mismatch");
  if (w.parts.size() >= m.r())
    throw std::invalid_argument("dichotomy: partition must have fewer than r parts");
  if (!witness_valid(m, edges, w))
    throw std::invalid_argument("dichotomy: witness does not fit the collection");
  const int s = w.parts.size();

  // branch (b): sweep split thresholds v + 1/2 inside each part; the first
  // over-budget sub-collection wins (parts ascending, v ascending, j ascending)
  for (int i = 1; i <= s; ++i) {
    const int li = w.parts.part(i);
    if (li < 2) continue;
    const std::int64_t lo = w.cuts[static_cast<size_t>(i - 1)];
    const std::int64_t hi = w.cuts[static_cast<size_t>(i)];
    // vertices of the collection inside part i, with their edge positions
    std::vector<std::pair<std::int64_t, int>> verts;
    for (size_t t = 0; t < edges.size(); ++t)
      for (std::int64_t v : m.edge(edges[t]))
        if (v > lo && v <= hi) verts.emplace_back(v, static_cast<int>(t));
    std::sort(verts.begin(), verts.end());
    std::vector<int> cnt(edges.size(), 0);      // part-i vertices of edge <= v
    std::vector<int> hist(static_cast<size_t>(li) + 1, 0);
    hist[0] = static_cast<int>(edges.size());
    // mu(j): part i split into (j, li - j), for each left count j
    std::vector<OrderedPartition> mu_of;
    mu_of.reserve(static_cast<size_t>(li - 1));
    for (int j = 1; j < li; ++j) {
      std::vector<int> parts = w.parts.parts();
      parts[static_cast<size_t>(i - 1)] = j;
      parts.insert(parts.begin() + i, li - j);
      mu_of.push_back(OrderedPartition(std::move(parts)));
    }
    for (const auto& [v, t] : verts) {
      --hist[static_cast<size_t>(cnt[static_cast<size_t>(t)])];
      ++cnt[static_cast<size_t>(t)];
      ++hist[static_cast<size_t>(cnt[static_cast<size_t>(t)])];
      if (v >= hi) continue;  // threshold must stay strictly inside the part
      for (int j = 1; j < li; ++j) {
        const OrderedPartition& mu = mu_of[static_cast<size_t>(j - 1)];
        const BigInt& cap = budgets.caps.at(mu);
        if (BigInt(hist[static_cast<size_t>(j)]) <= cap) continue;
        std::vector<std::int64_t> cuts = w.cuts;
        cuts.insert(cuts.begin() + i, v);
        DichotomyOutcome out{false, {}, PartiteWitness{mu, std::move(cuts)}};
        for (size_t t2 = 0; t2 < edges.size(); ++t2)
          if (cnt[t2] == j) out.edges.push_back(edges[t2]);
        if (!witness_valid(m, out.edges, out.witness))
          throw std::logic_error("dichotomy: refined witness failed re-verification");
        return out;
      }
    }
  }

  // branch (a): greedy minimum-degree independent set in the conflict graph
  // of intersecting part hulls (ties: lowest edge index)
  const size_t k = edges.size();
  std::vector<std::vector<char>> conflict(k, std::vector<char>(k, 0));
  std::vector<int> degree(k, 0);
  for (int i = 1; i <= s; ++i) {
    const std::int64_t lo = w.cuts[static_cast<size_t>(i - 1)];
    const std::int64_t hi = w.cuts[static_cast<size_t>(i)];
    std::vector<std::pair<std::int64_t, std::int64_t>> hull(k);
    for (size_t t = 0; t < k; ++t) {
      std::int64_t mn = std::numeric_limits<std::int64_t>::max();
      std::int64_t mx = std::numeric_limits<std::int64_t>::min();
      for (std::int64_t v : m.edge(edges[t]))
        if (v > lo && v <= hi) {
          mn = std::min(mn, v);
          mx = std::max(mx, v);
        }
      hull[t] = {mn, mx};
    }
    for (size_t a = 0; a < k; ++a)
      for (size_t b = a + 1; b < k; ++b)
        if (!conflict[a][b] && hull[a].first <= hull[b].second &&
            hull[b].first <= hull[a].second) {
          conflict[a][b] = conflict[b][a] = 1;
          ++degree[a];
          ++degree[b];
        }
  }
  std::vector<char> alive(k, 1);
  std::vector<int> chosen;
  for (;;) {
    int best = -1;
    for (size_t t = 0; t < k; ++t)
      if (alive[t] && (best < 0 || degree[t] < degree[static_cast<size_t>(best)]))
        best = static_cast<int>(t);
    if (best < 0) break;
    chosen.push_back(best);
    std::vector<size_t> removed{static_cast<size_t>(best)};
    for (size_t t = 0; t < k; ++t)
      if (alive[t] && conflict[static_cast<size_t>(best)][t] && t != static_cast<size_t>(best))
        removed.push_back(t);
    for (size_t t : removed) alive[t] = 0;
    for (size_t t : removed)
      for (size_t u = 0; u < k; ++u)
        if (alive[u] && conflict[t][u]) --degree[u];
  }
  std::sort(chosen.begin(), chosen.end());
  DichotomyOutcome out{true, {}, w};
  for (int t : chosen) out.edges.push_back(edges[static_cast<size_t>(t)]);
  if (!interval_wise_subset(m, out.edges, out.witness))
    throw std::logic_error("dichotomy: independent set is not interval-wise");
  const int need = ceil_div_int(static_cast<int>(k), 2 * budgets.total);
  if (static_cast<int>(out.edges.size()) < need)
    throw std::logic_error("dichotomy: independent set smaller than guaranteed");
  return out;
}

DichotomyOutcome dichotomy(const Matching& m, const PartiteWitness& w,
                           const PartitionBudgets& budgets) {
  return dichotomy(m, all_indices(m), w, budgets);
}

PointSet project_to_points(const Matching& m, const std::vector<int>& edges,
                           const PartiteWitness& w) {
  if (!interval_wise_subset(m, edges, w))
    throw std::invalid_argument("project_to_points: collection is not interval-wise");
  const int s = w.parts.size();
  std::vector<std::vector<BigInt>> pts;
  pts.reserve(edges.size());
  for (int idx : edges) {
    std::vector<BigInt> p(static_cast<size_t>(s));
    const auto& e = m.edge(idx);
    size_t pos = 0;
    for (int i = 1; i <= s; ++i) {
      // per-part minimum: the first vertex beyond cut i-1
      while (e[pos] <= w.cuts[static_cast<size_t>(i - 1)]) ++pos;
      p[static_cast<size_t>(i - 1)] = e[pos];
      while (pos < e.size() && e[pos] <= w.cuts[static_cast<size_t>(i)]) ++pos;
    }
    pts.push_back(std::move(p));
  }
  return PointSet(s, std::move(pts));
}

PointSet project_to_points(const Matching& m, const PartiteWitness& w) {
  return project_to_points(m, all_indices(m), w);
}

namespace {

// best monotone sequence over all sign functions, mapped back to edge indices
ExtractionResult project_and_pick(const Matching& m, const std::vector<int>& edges,
                                  const PartiteWitness& w, std::vector<TraceStep> trace) {
  const PointSet z = project_to_points(m, edges, w);
  MonotoneResult best;
  const SignFunction* best_tau = nullptr;
  const std::vector<SignFunction> taus = all_sign_functions(w.parts.size());
  for (const SignFunction& tau : taus) {
    MonotoneResult res = longest_monotone(z, tau);
    // ties: lexicographically smallest sign string, i.e. first in order
    if (res.length > best.length) {
      best = std::move(res);
      best_tau = &tau;
    }
  }
  ExtractionResult out{pattern_from(w.parts, *best_tau), {}, {}};
  for (int pos : best.sequence) out.clique.push_back(edges[static_cast<size_t>(pos)]);
  std::sort(out.clique.begin(), out.clique.end());
  for (size_t i = 0; i < out.clique.size(); ++i)
    for (size_t j = i + 1; j < out.clique.size(); ++j)
      if (pattern_of_pair(m.edge(out.clique[i]), m.edge(out.clique[j])) != out.pattern)
        throw std::logic_error("extract: clique failed pairwise verification");
  trace.push_back(TraceStep{w.parts, 'p', static_cast<int>(edges.size()),
                            static_cast<int>(out.clique.size()), std::nullopt});
  out.trace = std::move(trace);
  return out;
}

}  // namespace

ExtractionResult extract_best(const Matching& m, std::int64_t target_m) {
  if (target_m < 1) throw std::invalid_argument("extract: target must be >= 1");
  const int r = m.r();
  const BudgetTable budgets = BudgetTable::uniform(r, target_m);
  std::vector<int> edges = all_indices(m);
  PartiteWitness w = trivial_witness(m);
  std::vector<TraceStep> trace;
  // at most r - 1 refinements, then a projection
  while (w.parts.size() < r) {
    const PartitionBudgets pb = inductive_budgets(w.parts, budgets);
    DichotomyOutcome out = dichotomy(m, edges, w, pb);
    const bool interval_wise = out.interval_wise;
    trace.push_back(TraceStep{w.parts, interval_wise ? 'a' : 'b',
                              static_cast<int>(edges.size()),
                              static_cast<int>(out.edges.size()),
                              interval_wise ? std::nullopt
                                            : std::make_optional(out.witness.parts)});
    edges = std::move(out.edges);
    w = std::move(out.witness);
    if (interval_wise) break;
  }
  return project_and_pick(m, edges, w, std::move(trace));
}

std::optional<ExtractionResult> extract_clique(const Matching& m, std::int64_t target_m) {
  ExtractionResult res = extract_best(m, target_m);
  if (static_cast<std::int64_t>(res.clique.size()) > target_m) return res;
  if (BigInt(m.n()) > uniform_size_bound(m.r(), target_m))
    throw std::logic_error("extract: guarantee precondition held but clique too small");
  return std::nullopt;
}

BigInt uniform_size_bound(int r, std::int64_t m) {
  if (r < 1 || m < 1) throw std::invalid_argument("uniform_size_bound: r, m must be >= 1");
  return chain_count_constant(r) *
         big_pow(BigInt(m), (1u << static_cast<unsigned>(r)) - 1);
}

std::int64_t guaranteed_size(int r, std::int64_t n) {
  if (r < 1 || n < 1) throw std::invalid_argument("guaranteed_size: r, n must be >= 1");
  std::int64_t m = 0;
  while (BigInt(n) > uniform_size_bound(r, m + 1)) ++m;
  return m + 1;
}

nlohmann::json extraction_to_json(const ExtractionResult& res, bool include_trace) {
  nlohmann::json j;
  j["found"] = true;
  j["pattern"] = res.pattern.word();
  j["size"] = res.clique.size();
  j["clique"] = res.clique;
  if (include_trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const TraceStep& st : res.trace) {
      nlohmann::json sj;
      sj["parts"] = st.parts.to_string();
      sj["branch"] = std::string(1, st.branch);
      sj["in"] = st.in_size;
      sj["out"] = st.out_size;
      if (st.refined) sj["refined"] = st.refined->to_string();
      steps.push_back(std::move(sj));
    }
    j["trace"] = std::move(steps);
  }
  return j;
}

}  // namespace ordmatch
