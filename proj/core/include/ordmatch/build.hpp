#pragma once

#include <cstdint>

#include "ordmatch/bounds.hpp"
#include "ordmatch/matching.hpp"

namespace ordmatch {

// r-partite matching realizing the tight point-set witness: one edge
// {N + z_1, 2N + z_2, ..., rN + z_r} per point, normalized.  caps must cover
// exactly the patterns with block half-lengths (1,...,1); the result has
// largest P-clique <= caps[P] on those patterns and 1 elsewhere, with size
// equal to the cap product.
Matching build_r_partite(int r, const BudgetTable& caps);

// Matching of size = product of m_P over the chain's pattern set whose
// largest P-clique is at most m_P on the chain set and 1 off it.  Recursion
// on r: build for the reduced chain (merge the two elements sharing a part at
// level r-1), double the j-th element of every edge, then blow up with the
// r-partite layer.  budgets must cover the chain's pattern set.
Matching build_extremal(const PartitionChain& chain, const BudgetTable& budgets);

// build_extremal on the lexicographically first chain with uniform budgets m:
// size m^(2^r - 1), every collectable-pattern clique <= m.
Matching build_uniform(int r, std::int64_t m);

}  // namespace ordmatch
