#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ordmatch/bigint.hpp"
#include "ordmatch/pattern.hpp"

namespace ordmatch {

// Finite set of points in Z^s whose coordinates are pairwise distinct across
// all points and all coordinate positions.
class PointSet {
 public:
  PointSet(int dim, std::vector<std::vector<BigInt>> points);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<std::vector<BigInt>>& points() const { return points_; }
  const std::vector<BigInt>& point(int i) const { return points_.at(i); }  // 0-based

 private:
  int dim_;
  std::vector<std::vector<BigInt>> points_;
};

struct MonotoneResult {
  int length = 0;
  std::vector<int> sequence;  // 0-based point indices in chain order
};

// Longest tau-monotone sequence: coordinate i strictly increases along the
// sequence when tau(i) = +1 and strictly decreases when tau(i) = -1.
// Quadratic dynamic program; deterministic witness.
MonotoneResult longest_monotone(const PointSet& z, const SignFunction& tau);

// Largest height class of the tau-comparability order (lowest height on
// ties): a tau-antichain of size >= ceil(|Z| / L) where L is the longest
// tau-monotone length.  Returns 0-based point indices, ascending.
std::vector<int> antichain_extract(const PointSet& z, const SignFunction& tau);

// Checks |Z| <= product over all sign functions tau of the longest
// tau-monotone length.
bool es_upper_check(const PointSet& z);
bool es_upper_check(const PointSet& z, std::string* detail);

// The tight witness set: all points sum_i N^i tau_i(j) a_i with
// a_i in {1..caps[tau_i]} and N = 3 * max cap, where tau_1, tau_2, ... is the
// canonical sign-function order.  Its longest tau-monotone length equals
// caps[tau] exactly for every tau.
PointSet construct_point_set(int s, const std::map<SignFunction, int>& caps);

// JSON: array of coordinate arrays (a coordinate beyond int64 range is
// emitted as a decimal string).
nlohmann::json pointset_to_json(const PointSet& z);
PointSet pointset_from_json(const nlohmann::json& j);

}  // namespace ordmatch
