#include "ordmatch/pointset.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ordmatch {

PointSet::PointSet(int dim, std::vector<std::vector<BigInt>> points)
    : dim_(dim), points_(std::move(points)) {
  if (dim_ < 1) throw std::invalid_argument("PointSet: dim < 1");
  std::set<BigInt> seen;
  for (const auto& p : points_) {
    if (static_cast<int>(p.size()) != dim_)
      throw std::invalid_argument("PointSet: point dimension mismatch");
    for (const BigInt& c : p)
      if (!seen.insert(c).second)
        throw std::invalid_argument("PointSet: coordinates must be pairwise distinct");
  }
}

namespace {

// strict dominance in the tau order
bool tau_less(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
              const SignFunction& tau) {
  for (int i = 1; i <= tau.size(); ++i) {
    const size_t k = static_cast<size_t>(i - 1);
    if (tau.sign(i) > 0 ? !(a[k] < b[k]) : !(a[k] > b[k])) return false;
  }
  return true;
}

struct ChainDp {
  std::vector<int> order;   // point indices sorted by coordinate 1 ascending
  std::vector<int> height;  // longest chain ending at order position t
  std::vector<int> parent;  // predecessor order position, -1 at chain start
  int best_pos = 0;
};

// any tau-chain ascends in coordinate 1 (tau(1) = +1 always), so one pass in
// that order computes all chain heights
ChainDp chain_heights(const PointSet& z, const SignFunction& tau) {
  if (tau.size() != z.dim())
    throw std::invalid_argument("longest_monotone: sign length != dimension");
  ChainDp dp;
  dp.order.resize(static_cast<size_t>(z.size()));
  for (int i = 0; i < z.size(); ++i) dp.order[static_cast<size_t>(i)] = i;
  std::sort(dp.order.begin(), dp.order.end(),
            [&](int a, int b) { return z.point(a)[0] < z.point(b)[0]; });
  const size_t k = dp.order.size();
  dp.height.assign(k, 1);
  dp.parent.assign(k, -1);
  for (size_t t = 0; t < k; ++t) {
    for (size_t u = 0; u < t; ++u) {
      if (dp.height[u] + 1 > dp.height[t] &&
          tau_less(z.point(dp.order[u]), z.point(dp.order[t]), tau)) {
        dp.height[t] = dp.height[u] + 1;
        dp.parent[t] = static_cast<int>(u);
      }
    }
    if (dp.height[t] > dp.height[static_cast<size_t>(dp.best_pos)])
      dp.best_pos = static_cast<int>(t);
  }
  return dp;
}

}  // namespace

MonotoneResult longest_monotone(const PointSet& z, const SignFunction& tau) {
  if (z.size() == 0) return {0, {}};
  const ChainDp dp = chain_heights(z, tau);
  MonotoneResult res;
  res.length = dp.height[static_cast<size_t>(dp.best_pos)];
  for (int t = dp.best_pos; t >= 0; t = dp.parent[static_cast<size_t>(t)])
    res.sequence.push_back(dp.order[static_cast<size_t>(t)]);
  std::reverse(res.sequence.begin(), res.sequence.end());
  return res;
}

std::vector<int> antichain_extract(const PointSet& z, const SignFunction& tau) {
  if (z.size() == 0) return {};
  const ChainDp dp = chain_heights(z, tau);
  const int max_h = dp.height[static_cast<size_t>(dp.best_pos)];
  // points of equal chain height are pairwise incomparable
  std::vector<std::vector<int>> classes(static_cast<size_t>(max_h));
  for (size_t t = 0; t < dp.order.size(); ++t)
    classes[static_cast<size_t>(dp.height[t] - 1)].push_back(dp.order[t]);
  size_t best = 0;
  for (size_t h = 1; h < classes.size(); ++h)
    if (classes[h].size() > classes[best].size()) best = h;  // ties: lowest height
  std::vector<int> out = classes[best];
  std::sort(out.begin(), out.end());
  return out;
}

bool es_upper_check(const PointSet& z, std::string* detail) {
  BigInt prod = 1;
  std::string parts;
  for (const SignFunction& tau : all_sign_functions(z.dim())) {
    const int len = longest_monotone(z, tau).length;
    prod *= len;
    if (detail) {
      if (!parts.empty()) parts += ", ";
      parts += tau.to_string() + "=" + std::to_string(len);
    }
  }
  const bool ok = BigInt(z.size()) <= prod;
  if (detail)
    *detail = "|Z|=" + std::to_string(z.size()) + " vs product=" + prod.str() +
              " (" + parts + ")";
  return ok;
}

bool es_upper_check(const PointSet& z) { return es_upper_check(z, nullptr); }

PointSet construct_point_set(int s, const std::map<SignFunction, int>& caps) {
  const std::vector<SignFunction> taus = all_sign_functions(s);
  std::vector<int> m(taus.size());
  int max_cap = 1;
  for (size_t i = 0; i < taus.size(); ++i) {
    auto it = caps.find(taus[i]);
    if (it == caps.end())
      throw std::invalid_argument("construct_point_set: missing cap for " +
                                  taus[i].to_string());
    if (it->second < 1)
      throw std::invalid_argument("construct_point_set: cap < 1");
    m[i] = it->second;
    max_cap = std::max(max_cap, it->second);
  }
  if (caps.size() != taus.size())
    throw std::invalid_argument("construct_point_set: extra sign functions in caps");
  const BigInt n = 3 * max_cap;
  std::vector<BigInt> n_pow(taus.size() + 1);
  n_pow[0] = 1;
  for (size_t i = 1; i <= taus.size(); ++i) n_pow[i] = n_pow[i - 1] * n;
  std::vector<std::vector<BigInt>> points;
  std::vector<int> a(taus.size(), 1);  // odometer over {1..m_i} per position
  for (;;) {
    std::vector<BigInt> z(static_cast<size_t>(s), 0);
    for (int j = 1; j <= s; ++j) {
      BigInt& coord = z[static_cast<size_t>(j - 1)];
      for (size_t i = 0; i < taus.size(); ++i) {
        const BigInt term = n_pow[i + 1] * a[i];
        coord += taus[i].sign(j) > 0 ? term : -term;
      }
    }
    points.push_back(std::move(z));
    // advance odometer, last index fastest
    size_t pos = taus.size();
    while (pos > 0 && a[pos - 1] == m[pos - 1]) {
      a[pos - 1] = 1;
      --pos;
    }
    if (pos == 0) break;
    ++a[pos - 1];
  }
  return PointSet(s, std::move(points));
}

nlohmann::json pointset_to_json(const PointSet& z) {
  nlohmann::json arr = nlohmann::json::array();
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  for (const auto& p : z.points()) {
    nlohmann::json pj = nlohmann::json::array();
    for (const BigInt& c : p) {
      if (c < lo || c > hi)
        pj.push_back(c.str());
      else
        pj.push_back(static_cast<std::int64_t>(c));
    }
    arr.push_back(std::move(pj));
  }
  return arr;
}

PointSet pointset_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("pointset_from_json: expected nonempty array");
  std::vector<std::vector<BigInt>> points;
  for (const auto& pj : j) {
    std::vector<BigInt> p;
    for (const auto& cj : pj) {
      if (cj.is_string())
        p.emplace_back(cj.get<std::string>());
      else
        p.emplace_back(cj.get<std::int64_t>());
    }
    points.push_back(std::move(p));
  }
  const int dim = static_cast<int>(points.front().size());
  return PointSet(dim, std::move(points));
}

}  // namespace ordmatch
