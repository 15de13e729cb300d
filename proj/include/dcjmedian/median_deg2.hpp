#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dcjmedian/colored_graph.hpp"

namespace dcjmedian {

/// A matching on some vertices together with the number of alternating
/// cycles it realizes there.
struct ComponentMedian {
  std::vector<VertexPair> matching;
  int cyc = 0;
};

/// floor(k/2) alternating 2-cycles from consecutive pairs; an odd path
/// leaves its last vertex unmatched.
ComponentMedian path_median(const ComponentView& c);

/// Greedy stack scan pairing each vertex with a diagonal stack top. Returns
/// the cross-free diagonal perfect matching if one exists.
/// Throws std::invalid_argument unless `c` is an even cycle.
std::optional<std::vector<VertexPair>> cross_free_diagonal(const ComponentView& c);

/// k+1 cycles via the cross-free diagonal matching when it exists
/// (second kind), otherwise k cycles from consecutive pairs (first kind).
ComponentMedian cycle_median(const ComponentView& c);

struct PairWeight {
  int weight = 0;
  VertexPair crossing;
  /// Matching of the residual graph after shrinking `crossing`. Together with
  /// `crossing` it is a perfect matching of both components achieving `weight`.
  std::vector<VertexPair> sub_matching;
};

/// cyc of the union of two distinct odd components.
///
/// Uses the closed form floor(a/2) + floor(b/2), plus one when both are odd
/// cycles that admit a crossing pair whose shrink leaves a second-kind cycle.
/// That pair is found through a free-group hash of every vertex-deleted
/// cycle word and then confirmed by an exact stack scan.
PairWeight pair_weight(const ComponentView& a, const ComponentView& b);

/// Same quantity by its definition: the maximum over every crossing pair
/// (u, v) of the exhaustive degree-2 solve of the shrunk union. Ties go to
/// the lexicographically smallest pair.
PairWeight pair_weight_exhaustive(const ComponentView& a, const ComponentView& b);

enum class PairStrategy { closed_form, exhaustive };

struct Deg2Options {
  PairStrategy strategy = PairStrategy::closed_form;
};

/// Exact median of a graph with maximum degree 2 and an even vertex count.
/// The returned matching is perfect on g's vertices and its recount is
/// checked against `cyc` before returning.
ComponentMedian solve_deg2(const ColoredGraph& g, Deg2Options options = {});

/// Optimal cycle count only (closed-form strategy), without building the
/// matching.
int solve_deg2_value(const ColoredGraph& g);

/// Upper bound used to prune configurations: exact even-component values
/// plus floor(size/2) per odd component plus one per pair of odd cycles.
int deg2_upper_bound(std::span<const ComponentView> comps);

}  // namespace dcjmedian
