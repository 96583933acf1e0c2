#include "ordmatch/matching.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ordmatch {

Matching::Matching(int r, std::vector<std::vector<std::int64_t>> edges)
    : r_(r), edges_(std::move(edges)) {
  if (r_ < 1) throw std::invalid_argument("Matching: r < 1");
  if (edges_.empty()) throw std::invalid_argument("Matching: no edges");
  std::vector<std::int64_t> all;
  all.reserve(edges_.size() * static_cast<size_t>(r_));
  for (const auto& e : edges_) {
    if (static_cast<int>(e.size()) != r_)
      throw std::invalid_argument("Matching: edge arity mismatch");
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 1) throw std::invalid_argument("Matching: vertices must be positive");
      if (i > 0 && e[i - 1] >= e[i])
        throw std::invalid_argument("Matching: edge not strictly ascending");
      all.push_back(e[i]);
    }
  }
  std::sort(all.begin(), all.end());
  for (size_t i = 1; i < all.size(); ++i)
    if (all[i - 1] == all[i])
      throw std::invalid_argument("Matching: edges must be disjoint");
  // normalize: rank-relabel to {1..rn}, then sort edges by first element
  const bool contiguous = all.front() == 1 && all.back() == static_cast<std::int64_t>(all.size());
  if (!contiguous) {
    for (auto& e : edges_)
      for (auto& v : e) {
        const auto it = std::lower_bound(all.begin(), all.end(), v);
        v = static_cast<std::int64_t>(it - all.begin()) + 1;
      }
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

Matching normalize(const Matching& m) { return m; }

bool witness_valid(const Matching& m, const std::vector<int>& edges,
                   const PartiteWitness& w) {
  const int s = w.parts.size();
  if (w.parts.total() != m.r()) return false;
  if (static_cast<int>(w.cuts.size()) != s + 1) return false;
  for (int i = 1; i <= s; ++i)
    if (w.cuts[static_cast<size_t>(i - 1)] >= w.cuts[static_cast<size_t>(i)]) return false;
  for (int idx : edges) {
    const auto& e = m.edge(idx);
    size_t pos = 0;
    for (int i = 1; i <= s; ++i) {
      // vertices in (c_{i-1} + 1/2, c_i + 1/2) are exactly those in (c_{i-1}, c_i]
      int count = 0;
      while (pos < e.size() && e[pos] <= w.cuts[static_cast<size_t>(i)]) {
        if (e[pos] <= w.cuts[static_cast<size_t>(i - 1)]) return false;
        ++count;
        ++pos;
      }
      if (count != w.parts.part(i)) return false;
    }
    if (pos != e.size()) return false;
  }
  return true;
}

static std::vector<int> all_indices(const Matching& m) {
  std::vector<int> idx(static_cast<size_t>(m.n()));
  for (int i = 0; i < m.n(); ++i) idx[static_cast<size_t>(i)] = i;
  return idx;
}

std::optional<PartiteWitness> find_partite_witness(const Matching& m,
                                                   const OrderedPartition& lambda) {
  if (lambda.total() != m.r()) return std::nullopt;
  // each edge holds lambda_1 + ... + lambda_i vertices below cut i, so a
  // normalized matching admits only the cuts c_i = n * prefix_i
  std::vector<std::int64_t> cuts{0};
  std::int64_t prefix = 0;
  for (int i = 1; i <= lambda.size(); ++i) {
    prefix += lambda.part(i);
    cuts.push_back(prefix * m.n());
  }
  PartiteWitness w{lambda, std::move(cuts)};
  if (!witness_valid(m, all_indices(m), w)) return std::nullopt;
  return w;
}

bool interval_wise_subset(const Matching& m, const std::vector<int>& edges,
                          const PartiteWitness& w) {
  if (!witness_valid(m, edges, w))
    throw std::invalid_argument("interval_wise: witness does not fit the collection");
  const int s = w.parts.size();
  for (int i = 1; i <= s; ++i) {
    const std::int64_t lo = w.cuts[static_cast<size_t>(i - 1)];
    const std::int64_t hi = w.cuts[static_cast<size_t>(i)];
    std::vector<std::pair<std::int64_t, std::int64_t>> hulls;  // (min, max) per edge
    hulls.reserve(edges.size());
    for (int idx : edges) {
      const auto& e = m.edge(idx);
      std::int64_t mn = std::numeric_limits<std::int64_t>::max();
      std::int64_t mx = std::numeric_limits<std::int64_t>::min();
      for (std::int64_t v : e)
        if (v > lo && v <= hi) {
          mn = std::min(mn, v);
          mx = std::max(mx, v);
        }
      hulls.emplace_back(mn, mx);
    }
    std::sort(hulls.begin(), hulls.end());
    for (size_t t = 1; t < hulls.size(); ++t)
      if (hulls[t - 1].second >= hulls[t].first) return false;
  }
  return true;
}

bool is_interval_wise(const Matching& m, const PartiteWitness& w) {
  return interval_wise_subset(m, all_indices(m), w);
}

Matching blow_up(const Matching& h, const Matching& h_r, std::int64_t scale) {
  if (h.r() != h_r.r())
    throw std::invalid_argument("blow_up: uniformity mismatch");
  const auto w = find_partite_witness(h_r, OrderedPartition::discrete(h_r.r()));
  if (!w) throw std::invalid_argument("blow_up: inner matching is not r-partite");
  const std::int64_t span = w->cuts.back() - w->cuts.front();
  if (scale == 0) {
    scale = 1;
    while (scale <= span) scale *= 10;
  } else if (scale <= span) {
    throw std::invalid_argument("blow_up: scale must exceed the witness span");
  }
  const std::int64_t max_x = h.edges().back().back() + 1;
  if (scale > std::numeric_limits<std::int64_t>::max() / (max_x + 1))
    throw std::overflow_error("blow_up: scale too large");
  std::vector<std::vector<std::int64_t>> edges;
  edges.reserve(static_cast<size_t>(h.n()) * static_cast<size_t>(h_r.n()));
  for (const auto& ex : h.edges())
    for (const auto& ey : h_r.edges()) {
      std::vector<std::int64_t> e(ex.size());
      for (size_t i = 0; i < ex.size(); ++i) e[i] = scale * ex[i] + ey[i];
      edges.push_back(std::move(e));
    }
  return Matching(h.r(), std::move(edges));
}

namespace {
// rejection sampling keeps the shuffle identical on every platform
std::uint64_t bounded_draw(std::mt19937_64& eng, std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = eng();
  } while (x >= limit);
  return x % bound;
}
}  // namespace

Matching random_matching(int n, int r, std::uint64_t seed) {
  if (n < 1 || r < 1) throw std::invalid_argument("random_matching: n, r must be >= 1");
  std::mt19937_64 eng(seed);
  const size_t total = static_cast<size_t>(n) * static_cast<size_t>(r);
  std::vector<std::int64_t> deck(total);
  for (size_t i = 0; i < total; ++i) deck[i] = static_cast<std::int64_t>(i) + 1;
  for (size_t i = total - 1; i > 0; --i) {
    const size_t j = static_cast<size_t>(bounded_draw(eng, i + 1));
    std::swap(deck[i], deck[j]);
  }
  std::vector<std::vector<std::int64_t>> edges(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    auto& e = edges[static_cast<size_t>(k)];
    e.assign(deck.begin() + static_cast<std::ptrdiff_t>(k) * r,
             deck.begin() + (static_cast<std::ptrdiff_t>(k) + 1) * r);
    std::sort(e.begin(), e.end());
  }
  return Matching(r, std::move(edges));
}

void write_matching_text(std::ostream& out, const Matching& m) {
  out << m.r() << ' ' << m.n() << '\n';
  for (const auto& e : m.edges()) {
    for (size_t i = 0; i < e.size(); ++i) {
      if (i) out << ' ';
      out << e[i];
    }
    out << '\n';
  }
}

Matching read_matching_text(std::istream& in, const std::string& source) {
  int r = 0, n = 0;
  if (!(in >> r >> n))
    throw std::runtime_error(source + ": expected header line 'r n'");
  if (r < 1 || n < 1)
    throw std::runtime_error(source + ": r and n must be >= 1");
  std::vector<std::vector<std::int64_t>> edges(static_cast<size_t>(n),
                                               std::vector<std::int64_t>(static_cast<size_t>(r)));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < r; ++i)
      if (!(in >> edges[static_cast<size_t>(k)][static_cast<size_t>(i)]))
        throw std::runtime_error(source + ": truncated edge list");
  try {
    return Matching(r, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(source + ": " + e.what());
  }
}

nlohmann::json matching_to_json(const Matching& m) {
  nlohmann::json j;
  j["r"] = m.r();
  j["edges"] = m.edges();
  return j;
}

Matching matching_from_json(const nlohmann::json& j, const std::string& source) {
  if (!j.is_object() || !j.contains("r") || !j.contains("edges"))
    throw std::runtime_error(source + ": expected {\"r\":..., \"edges\":[...]}");
  try {
    return Matching(j.at("r").get<int>(),
                    j.at("edges").get<std::vector<std::vector<std::int64_t>>>());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(source + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(source + ": " + e.what());
  }
}

Matching read_matching_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  // JSON when the first non-space byte is '{'
  char c;
  while (in.get(c) && (c == ' ' || c == '\t' || c == '\n' || c == '\r')) {
  }
  if (!in) throw std::runtime_error(path + ": empty file");
  in.unget();
  if (c == '{') {
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error(path + ": " + e.what());
    }
    return matching_from_json(j, path);
  }
  return read_matching_text(in, path);
}

void write_matching_file(const std::string& path, const Matching& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  write_matching_text(out, m);
  if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace ordmatch
