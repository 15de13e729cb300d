#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace dcjmedian {

/// Complete graph on an even number of nodes with symmetric non-negative
/// integer weights.
class WeightedCompleteGraph {
 public:
  explicit WeightedCompleteGraph(int size);

  int size() const noexcept { return size_; }
  std::int64_t weight(int i, int j) const { return w_[index(i, j)]; }
  /// Sets w(i, j) = w(j, i); throws on i == j or a negative weight.
  void set_weight(int i, int j, std::int64_t w);

 private:
  std::size_t index(int i, int j) const;
  int size_;
  std::vector<std::int64_t> w_;
};

using NodePair = std::pair<int, int>;  // first < second

struct PairingResult {
  std::vector<NodePair> pairs;  // sorted by first node
  std::int64_t total = 0;
};

/// Maximum-weight perfect matching (Edmonds' blossom algorithm with dual
/// variables, O(t^3)). Among optima the lexicographically smallest pair list
/// is returned for t <= kLexicographicRefinementLimit; above that the result
/// is optimal and deterministic but the tie-break is the algorithm's own.
PairingResult max_weight_perfect_matching(const WeightedCompleteGraph& g);

inline constexpr int kLexicographicRefinementLimit = 24;

/// Exhaustive maximum over all (t-1)!! pairings, first optimum in
/// lexicographic order. Throws std::invalid_argument for t > 12.
PairingResult brute_force_pairing(const WeightedCompleteGraph& g);

inline constexpr int kBruteForcePairingLimit = 12;

}  // namespace dcjmedian
