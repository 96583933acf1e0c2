#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordmatch/bigint.hpp"
#include "ordmatch/clique.hpp"
#include "ordmatch/matching.hpp"

namespace ordmatch {

// (rn)! / ((r!)^n * n!)
BigInt matching_count(int n, int r);

class BudgetExceededError : public std::runtime_error {
 public:
  BudgetExceededError(BigInt count, const BigInt& budget);
  const BigInt& count() const { return count_; }

 private:
  BigInt count_;
};

// Streams every perfect matching of {1,...,rn} in canonical order (smallest
// unused vertex first, partner sets lexicographic).  Edges arrive sorted by
// first element with vertices 1..rn, so each value is already normalized.
// Refuses to start when matching_count(n, r) exceeds the budget.  The
// callback returns false to stop early.
void enumerate_matchings(
    int n, int r,
    const std::function<bool(const std::vector<std::vector<std::int64_t>>&)>& cb,
    const BigInt& budget = BigInt(100000000));

struct RamseyResult {
  int value = 0;
  Matching witness;
};

// min over all perfect matchings of the overall largest clique size, by
// canonical enumeration with incremental pruning: a partial matching already
// containing a clique of the current minimum size cannot improve and is
// abandoned.  Same budget guard as enumerate_matchings.
RamseyResult exact_ramsey(int n, int r, const BigInt& budget = BigInt(100000000));

struct SweepRow {
  int index = 0;
  int n = 0;
  BigInt upper;        // budget upper bound at the instance's exact clique caps
  BigInt lower;        // best chain product at those caps
  int built = 0;       // size of the matching rebuilt from the best chain
  bool pass = false;   // n <= upper and built >= lower
};

// Checks every instance against the bound pair at its exact per-pattern
// clique budgets.  One row per instance.
std::vector<SweepRow> sweep_check(const std::vector<Matching>& instances,
                                  int threads = 1);

std::string sweep_row_tsv_header();
std::string sweep_row_tsv(const SweepRow& row);

}  // namespace ordmatch
