#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dcjmedian/colored_graph.hpp"

namespace dcjmedian {

/// Exhaustive search refuses graphs with more vertices than this.
struct OracleBudget {
  int max_vertices = 14;
};

struct OracleMedian {
  std::vector<VertexPair> matching;
  int cyc = 0;
  std::uint64_t matchings_enumerated = 0;
};

/// Best perfect matching by brute force. Matchings are generated by pairing
/// the smallest unmatched vertex with each later vertex in ascending order;
/// the first strict maximum wins.
/// Throws BudgetExceeded above the budget and std::invalid_argument for an
/// odd vertex count.
OracleMedian exhaustive_median(const ColoredGraph& g, OracleBudget budget = {});

/// cyc of one component taken on its own. Odd components leave one vertex
/// unmatched, maximizing over that choice.
int exhaustive_component_cyc(const ComponentView& c, OracleBudget budget = {});

/// Same maximum for any graph with max degree <= 2 and any vertex count
/// parity (one vertex left unmatched when odd).
int exhaustive_cyc(const ColoredGraph& g, OracleBudget budget = {});

/// Alternating-cycle count by union-find, kept separate from the traversal
/// counter so the two can check each other. `matching` may be partial.
int union_find_cycle_count(const ColoredGraph& g, std::span<const VertexPair> matching);

/// (2t - 1)!! for t >= 0.
std::uint64_t perfect_matching_count(int t);

}  // namespace dcjmedian
