#pragma once

#include <string>
#include <vector>

namespace ordmatch {

// Ordered partition (composition) of a positive integer r: a sequence of
// positive parts whose sum is r.  Part order is significant.
class OrderedPartition {
 public:
  explicit OrderedPartition(std::vector<int> parts);

  // Parses "1,2,1".
  static OrderedPartition parse(const std::string& csv);
  // The one-part partition (r).
  static OrderedPartition whole(int r);
  // The all-ones partition (1,...,1) of r.
  static OrderedPartition discrete(int r);

  const std::vector<int>& parts() const { return parts_; }
  int total() const { return total_; }               // r
  int size() const { return static_cast<int>(parts_.size()); }  // s
  int part(int i) const { return parts_.at(i - 1); }  // 1-based

  std::string to_string() const;  // "1,2,1"

  bool operator==(const OrderedPartition& o) const { return parts_ == o.parts_; }
  bool operator!=(const OrderedPartition& o) const { return parts_ != o.parts_; }
  bool operator<(const OrderedPartition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
  int total_;
};

// A maximal chain of one-split refinements: levels[s-1] has exactly s parts,
// levels[0] = (r), levels[r-1] = (1,...,1).
class PartitionChain {
 public:
  explicit PartitionChain(std::vector<OrderedPartition> levels);

  // Parses "3>1,2>1,1,1" (levels separated by '>').
  static PartitionChain parse(const std::string& text);

  const std::vector<OrderedPartition>& levels() const { return levels_; }
  const OrderedPartition& level(int s) const { return levels_.at(s - 1); }  // 1-based
  int uniformity() const { return levels_.front().total(); }

  std::string to_string() const;

  bool operator==(const PartitionChain& o) const { return levels_ == o.levels_; }

 private:
  std::vector<OrderedPartition> levels_;
};

// All compositions of r in lexicographic order; 2^(r-1) of them.
std::vector<OrderedPartition> compositions(int r);

// True iff fine is obtained from coarse by splitting parts in place
// (interval refinement).  Reflexive: zero splits allowed.
bool refines(const OrderedPartition& coarse, const OrderedPartition& fine);

// Refinements of p obtained by splitting exactly one part into two,
// ordered lexicographically (split position ascending, left size ascending).
std::vector<OrderedPartition> one_split_refinements(const OrderedPartition& p);

// All maximal chains for r, in lexicographic level order; (r-1)! of them.
std::vector<PartitionChain> chains(int r);

}  // namespace ordmatch
