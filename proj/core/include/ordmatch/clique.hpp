#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ordmatch/matching.hpp"
#include "ordmatch/pattern.hpp"

namespace ordmatch {

struct CliqueEntry {
  int size = 0;
  std::vector<int> witness;  // 0-based edge indices, ascending
};

struct CliqueReport {
  int r = 0;
  int n = 0;
  Pattern best;           // overall largest clique; ties -> smallest pattern word
  int best_size = 0;
  std::map<Pattern, CliqueEntry> cliques;  // every r-pattern
};

// Exact maximum P-clique (set of edges pairwise realizing P) by branch and
// bound with greedy-coloring pruning.  Deterministic.  Refuses matchings with
// more than 10^4 edges unless force is set.
CliqueEntry largest_clique(const Matching& m, const Pattern& p, bool force = false);

// largest_clique for every r-pattern (patterns unrealized by any pair get a
// size-1 entry).  Pattern evaluations may run on `threads` workers; the result
// is identical for any thread count.
CliqueReport full_report(const Matching& m, int threads = 1, bool force = false);

// Longest-path heuristic for collectable P on the min-ordered pairwise-P
// digraph.  The path is verified pairwise; on failure falls back to
// largest_clique, so the returned size always matches the exact value.
CliqueEntry chain_fast_path(const Matching& m, const Pattern& p);

nlohmann::json report_to_json(const CliqueReport& rep);
CliqueReport report_from_json(const nlohmann::json& j);

// Re-checks a claimed report against the matching: witness indices in range
// and duplicate-free, every witness pairwise realizes its pattern, sizes
// match witness lengths, and the overall entry equals the per-pattern
// maximum.  Returns human-readable failure descriptions (empty = OK).
std::vector<std::string> verify_report(const Matching& m, const CliqueReport& rep);

}  // namespace ordmatch
