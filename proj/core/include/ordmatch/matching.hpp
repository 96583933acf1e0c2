#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ordmatch/partition.hpp"

namespace ordmatch {

// Perfect ordered matching: n pairwise-disjoint sorted r-sets of positive
// integers.  Construction normalizes: vertices are relabeled to {1,...,rn}
// preserving relative order and edges are sorted by first element.
class Matching {
 public:
  Matching(int r, std::vector<std::vector<std::int64_t>> edges);

  int r() const { return r_; }
  int n() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::vector<std::int64_t>>& edges() const { return edges_; }
  const std::vector<std::int64_t>& edge(int i) const { return edges_.at(i); }  // 0-based

  bool operator==(const Matching& o) const { return r_ == o.r_ && edges_ == o.edges_; }

 private:
  int r_;
  std::vector<std::vector<std::int64_t>> edges_;
};

// Cut positions for a lambda-partite witness.  cuts holds s+1 integers
// c_0 < ... < c_s; cut i is the real threshold c_i + 1/2.  Every edge must
// have exactly lambda_i vertices in (c_{i-1} + 1/2, c_i + 1/2).
struct PartiteWitness {
  OrderedPartition parts;
  std::vector<std::int64_t> cuts;
};

// Identity on an already-normalized matching; idempotent.
Matching normalize(const Matching& m);

// True iff every edge listed in `edges` (0-based indices into m) satisfies the
// witness part counts.
bool witness_valid(const Matching& m, const std::vector<int>& edges,
                   const PartiteWitness& w);

// The unique candidate witness for lambda, or absent.  For a normalized
// matching the only possible cuts are c_i = n * (lambda_1 + ... + lambda_i).
std::optional<PartiteWitness> find_partite_witness(const Matching& m,
                                                   const OrderedPartition& lambda);

// True iff additionally, within every part, the convex hulls of the per-edge
// vertex blocks are pairwise disjoint.  Errors if w is not a valid witness.
bool is_interval_wise(const Matching& m, const PartiteWitness& w);
bool interval_wise_subset(const Matching& m, const std::vector<int>& edges,
                          const PartiteWitness& w);

// Replace every vertex of h by a contiguous block of copies patterned after
// h_r (which must be r-partite): edges {scale*x_i + y_i} over all edge pairs,
// normalized.  scale = 0 picks the smallest power of ten strictly exceeding
// the witness span of h_r; an explicit scale must also exceed it.
Matching blow_up(const Matching& h, const Matching& h_r, std::int64_t scale = 0);

// Uniformly random perfect matching: seeded Fisher-Yates shuffle of {1,...,rn}
// chopped into consecutive r-blocks.  Deterministic per seed.
Matching random_matching(int n, int r, std::uint64_t seed);

// Text format: line 1 "r n", then n lines of r space-separated ascending
// vertices, sorted by first element, LF line ends.
void write_matching_text(std::ostream& out, const Matching& m);
Matching read_matching_text(std::istream& in, const std::string& source = "<stream>");

// JSON form: {"r": int, "edges": [[...], ...]}.
nlohmann::json matching_to_json(const Matching& m);
Matching matching_from_json(const nlohmann::json& j, const std::string& source = "<json>");

// Reads either format (JSON when the first non-space byte is '{').
Matching read_matching_file(const std::string& path);
void write_matching_file(const std::string& path, const Matching& m);

}  // namespace ordmatch
