#include "ordmatch/clique.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

namespace ordmatch {

namespace {

constexpr int kSizeGuard = 10000;

class BitRows {
 public:
  explicit BitRows(int n)
      : n_(n), words_((static_cast<size_t>(n) + 63) / 64),
        rows_(static_cast<size_t>(n) * words_, 0) {}

  void set(int i, int j) {
    rows_[static_cast<size_t>(i) * words_ + static_cast<size_t>(j) / 64] |=
        1ull << (static_cast<size_t>(j) % 64);
  }
  bool get(int i, int j) const {
    return (rows_[static_cast<size_t>(i) * words_ + static_cast<size_t>(j) / 64] >>
            (static_cast<size_t>(j) % 64)) &
           1ull;
  }
  int degree(int i) const {
    int d = 0;
    for (size_t w = 0; w < words_; ++w)
      d += __builtin_popcountll(rows_[static_cast<size_t>(i) * words_ + w]);
    return d;
  }

 private:
  int n_;
  size_t words_;
  std::vector<std::uint64_t> rows_;
};

// Tomita-style branch and bound: candidates are greedily colored and visited
// in reverse color order; |R| + color is the prune bound.
class MaxCliqueSolver {
 public:
  explicit MaxCliqueSolver(const BitRows& adj, int n) : adj_(adj), n_(n) {}

  CliqueEntry solve() {
    best_.size = 1;
    best_.witness = {0};
    std::vector<int> p(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) p[static_cast<size_t>(i)] = i;
    std::stable_sort(p.begin(), p.end(),
                     [&](int a, int b) { return adj_.degree(a) > adj_.degree(b); });
    expand(p);
    std::sort(best_.witness.begin(), best_.witness.end());
    return best_;
  }

 private:
  void expand(const std::vector<int>& cand) {
    if (cand.empty()) {
      if (static_cast<int>(stack_.size()) > best_.size) {
        best_.size = static_cast<int>(stack_.size());
        best_.witness = stack_;
      }
      return;
    }
    // greedy sequential coloring; classes come out in ascending color
    std::vector<std::vector<int>> classes;
    for (int v : cand) {
      bool placed = false;
      for (auto& cls : classes) {
        bool clash = false;
        for (int u : cls)
          if (adj_.get(u, v)) {
            clash = true;
            break;
          }
        if (!clash) {
          cls.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({v});
    }
    std::vector<int> order;
    std::vector<int> color;
    order.reserve(cand.size());
    color.reserve(cand.size());
    for (size_t c = 0; c < classes.size(); ++c)
      for (int v : classes[c]) {
        order.push_back(v);
        color.push_back(static_cast<int>(c) + 1);
      }
    for (int t = static_cast<int>(order.size()) - 1; t >= 0; --t) {
      if (static_cast<int>(stack_.size()) + color[static_cast<size_t>(t)] <= best_.size)
        return;  // every remaining vertex has color <= this one
      const int v = order[static_cast<size_t>(t)];
      std::vector<int> next;
      for (int u0 = 0; u0 < t; ++u0) {
        const int u = order[static_cast<size_t>(u0)];
        if (adj_.get(v, u)) next.push_back(u);
      }
      stack_.push_back(v);
      expand(next);
      stack_.pop_back();
    }
  }

  const BitRows& adj_;
  int n_;
  CliqueEntry best_;
  std::vector<int> stack_;
};

BitRows pattern_adjacency(const Matching& m, const Pattern& p) {
  BitRows adj(m.n());
  for (int i = 0; i < m.n(); ++i)
    for (int j = i + 1; j < m.n(); ++j)
      if (pattern_of_pair(m.edge(i), m.edge(j)) == p) {
        adj.set(i, j);
        adj.set(j, i);
      }
  return adj;
}

void check_size_guard(const Matching& m, bool force) {
  if (!force && m.n() > kSizeGuard)
    throw std::invalid_argument(
        "clique analysis refuses more than 10000 edges without force");
}

void verify_pairwise(const Matching& m, const Pattern& p, const std::vector<int>& w) {
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (pattern_of_pair(m.edge(w[i]), m.edge(w[j])) != p)
        throw std::logic_error("clique witness failed pairwise verification");
}

}  // namespace

CliqueEntry largest_clique(const Matching& m, const Pattern& p, bool force) {
  if (p.uniformity() != m.r())
    throw std::invalid_argument("largest_clique: pattern uniformity mismatch");
  check_size_guard(m, force);
  const BitRows adj = pattern_adjacency(m, p);
  CliqueEntry entry = MaxCliqueSolver(adj, m.n()).solve();
  verify_pairwise(m, p, entry.witness);
  return entry;
}

CliqueReport full_report(const Matching& m, int threads, bool force) {
  check_size_guard(m, force);
  if (threads < 1) threads = 1;
  const std::vector<Pattern> pats = all_patterns(m.r());
  std::vector<CliqueEntry> entries(pats.size());
  std::atomic<size_t> cursor{0};
  auto worker = [&]() {
    for (;;) {
      const size_t k = cursor.fetch_add(1);
      if (k >= pats.size()) break;
      const BitRows adj = pattern_adjacency(m, pats[k]);
      entries[k] = MaxCliqueSolver(adj, m.n()).solve();
      verify_pairwise(m, pats[k], entries[k].witness);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const int workers = std::min<int>(threads, static_cast<int>(pats.size()));
    pool.reserve(static_cast<size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  CliqueReport rep{m.r(), m.n(), pats.front(), 0, {}};
  for (size_t k = 0; k < pats.size(); ++k) {
    rep.cliques.emplace(pats[k], entries[k]);
    // ties resolve to the lexicographically smallest pattern word
    if (entries[k].size > rep.best_size) {
      rep.best_size = entries[k].size;
      rep.best = pats[k];
    }
  }
  return rep;
}

CliqueEntry chain_fast_path(const Matching& m, const Pattern& p) {
  if (p.uniformity() != m.r())
    throw std::invalid_argument("chain_fast_path: pattern uniformity mismatch");
  if (!is_collectable(p))
    throw std::invalid_argument("chain_fast_path: pattern has no block partition");
  // longest path in the min-ordered pairwise digraph; edges are sorted by
  // first element already, so arcs only point forward
  const int n = m.n();
  std::vector<int> len(static_cast<size_t>(n), 1);
  std::vector<int> parent(static_cast<size_t>(n), -1);
  int best = 0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i)
      if (len[static_cast<size_t>(i)] + 1 > len[static_cast<size_t>(j)] &&
          pattern_of_pair(m.edge(i), m.edge(j)) == p) {
        len[static_cast<size_t>(j)] = len[static_cast<size_t>(i)] + 1;
        parent[static_cast<size_t>(j)] = i;
      }
    if (len[static_cast<size_t>(j)] > len[static_cast<size_t>(best)]) best = j;
  }
  CliqueEntry entry;
  entry.size = len[static_cast<size_t>(best)];
  for (int t = best; t >= 0; t = parent[static_cast<size_t>(t)])
    entry.witness.push_back(t);
  std::sort(entry.witness.begin(), entry.witness.end());
  // the relation is not transitive in general: accept only a verified path
  for (size_t i = 0; i < entry.witness.size(); ++i)
    for (size_t j = i + 1; j < entry.witness.size(); ++j)
      if (pattern_of_pair(m.edge(entry.witness[i]), m.edge(entry.witness[j])) != p)
        return largest_clique(m, p);
  return entry;
}

nlohmann::json report_to_json(const CliqueReport& rep) {
  nlohmann::json j;
  j["r"] = rep.r;
  j["n"] = rep.n;
  j["overall"] = {{"pattern", rep.best.word()}, {"size", rep.best_size}};
  nlohmann::json cl = nlohmann::json::object();
  for (const auto& [p, entry] : rep.cliques)
    cl[p.word()] = {{"size", entry.size}, {"witness", entry.witness}};
  j["cliques"] = std::move(cl);
  return j;
}

CliqueReport report_from_json(const nlohmann::json& j) {
  CliqueReport rep{j.at("r").get<int>(), j.at("n").get<int>(),
                   Pattern(j.at("overall").at("pattern").get<std::string>()),
                   j.at("overall").at("size").get<int>(),
                   {}};
  for (const auto& [word, ej] : j.at("cliques").items()) {
    CliqueEntry entry{ej.at("size").get<int>(),
                      ej.at("witness").get<std::vector<int>>()};
    rep.cliques.emplace(Pattern(word), std::move(entry));
  }
  return rep;
}

std::vector<std::string> verify_report(const Matching& m, const CliqueReport& rep) {
  std::vector<std::string> errors;
  if (rep.r != m.r()) errors.push_back("report r does not match matching");
  if (rep.n != m.n()) errors.push_back("report n does not match matching");
  int max_size = 0;
  for (const auto& [p, entry] : rep.cliques) {
    const std::string tag = "pattern " + p.word() + ": ";
    if (p.uniformity() != m.r()) {
      errors.push_back(tag + "wrong uniformity");
      continue;
    }
    if (entry.size != static_cast<int>(entry.witness.size())) {
      errors.push_back(tag + "size does not match witness length");
      continue;
    }
    std::vector<int> w = entry.witness;
    std::sort(w.begin(), w.end());
    bool in_range = true;
    for (int idx : w)
      if (idx < 0 || idx >= m.n()) in_range = false;
    if (!in_range) {
      errors.push_back(tag + "witness index out of range");
      continue;
    }
    if (std::adjacent_find(w.begin(), w.end()) != w.end()) {
      errors.push_back(tag + "duplicate witness index");
      continue;
    }
    bool pairwise = true;
    for (size_t i = 0; i < w.size() && pairwise; ++i)
      for (size_t j = i + 1; j < w.size() && pairwise; ++j)
        if (pattern_of_pair(m.edge(w[i]), m.edge(w[j])) != p) pairwise = false;
    if (!pairwise) {
      errors.push_back(tag + "witness is not pairwise consistent");
      continue;
    }
    max_size = std::max(max_size, entry.size);
  }
  if (errors.empty()) {
    if (rep.best_size != max_size)
      errors.push_back("overall size is not the per-pattern maximum");
    auto it = rep.cliques.find(rep.best);
    if (it == rep.cliques.end())
      errors.push_back("overall pattern missing from clique table");
    else if (it->second.size != rep.best_size)
      errors.push_back("overall size disagrees with its pattern entry");
  }
  return errors;
}

}  // namespace ordmatch
