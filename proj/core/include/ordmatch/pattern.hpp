#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordmatch/partition.hpp"

namespace ordmatch {

// Relative order type of two disjoint r-sets: a word over {A,B} of length 2r
// with r of each letter, starting with A (the set holding the global minimum
// plays the A role).
class Pattern {
 public:
  explicit Pattern(std::string word);

  const std::string& word() const { return word_; }
  int uniformity() const { return static_cast<int>(word_.size()) / 2; }

  bool operator==(const Pattern& o) const { return word_ == o.word_; }
  bool operator!=(const Pattern& o) const { return word_ != o.word_; }
  bool operator<(const Pattern& o) const { return word_ < o.word_; }

 private:
  std::string word_;
};

// Sign vector of length s with first entry +1.  Entries are +1 or -1.
class SignFunction {
 public:
  explicit SignFunction(std::vector<int> signs);

  // Parses "++-".
  static SignFunction parse(const std::string& text);

  int size() const { return static_cast<int>(signs_.size()); }
  int sign(int i) const { return signs_.at(i - 1); }  // 1-based
  const std::vector<int>& signs() const { return signs_; }

  std::string to_string() const;  // "++-"

  bool operator==(const SignFunction& o) const { return signs_ == o.signs_; }
  // '+' sorts before '-': iteration order matches all_sign_functions.
  bool operator<(const SignFunction& o) const;

 private:
  std::vector<int> signs_;
};

// The 2^(s-1) sign functions of length s, ordered by binary counting on
// entries 2..s with '+' before '-'.  Position in this list (1-based) is the
// canonical index used by construct_point_set.
std::vector<SignFunction> all_sign_functions(int s);

// Pattern of the pair (e, f): merge both sets, label the set containing the
// overall minimum A, the other B.  Inputs must be disjoint, sorted, equal size.
Pattern pattern_of_pair(const std::vector<std::int64_t>& e,
                        const std::vector<std::int64_t>& f);

// Unique decomposition into consecutive A^k B^k / B^k A^k blocks, as the
// sequence of block half-lengths; absent when no decomposition exists.
std::optional<OrderedPartition> block_partition(const Pattern& p);

// Block partition together with the per-block orientation (+1 for A-first).
std::optional<std::pair<OrderedPartition, SignFunction>> block_decomposition(
    const Pattern& p);

bool is_collectable(const Pattern& p);

// The pattern with block half-lengths lambda and orientations tau:
// part i contributes A^l B^l when tau(i) = +1 and B^l A^l otherwise.
Pattern pattern_from(const OrderedPartition& lambda, const SignFunction& tau);

// All 2^(s-1) patterns with block half-lengths lambda, in sign-function order.
std::vector<Pattern> patterns_of(const OrderedPartition& lambda);

// Every r-pattern in lexicographic order: C(2r-1, r-1) words.
std::vector<Pattern> all_patterns(int r);

// The collectable r-patterns in lexicographic order: 3^(r-1) words.
std::vector<Pattern> collectable_patterns(int r);

// Duplicate the j-th A and the j-th B of a collectable pattern (1 <= j <= r').
Pattern double_letters(const Pattern& p, int j);

// Remove the j-th A and the j-th B (1 <= j <= r).  Errors if the remaining
// word is empty or starts with B.
Pattern omit_letters(const Pattern& p, int j);

}  // namespace ordmatch
