#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dcjmedian/colored_graph.hpp"
#include "dcjmedian/genome.hpp"

namespace dcjmedian {

/// One incident edge dropped on behalf of a degree-3 vertex.
struct Removal {
  VertexId vertex = kNoVertex;
  ColoredEdge edge;

  friend auto operator<=>(const Removal&, const Removal&) = default;
};

/// A way of resolving the degree-3 vertices: some of them are matched to
/// each other (shrunk in order), then every vertex still of degree 3 drops
/// one incident edge.
struct Configuration {
  std::vector<VertexPair> pairs;
  std::vector<Removal> removals;
  int gain = 0;  // edges consumed by the shrinks
};

/// Degree-3 vertices in ascending order.
std::vector<VertexId> degree3_vertices(const ColoredGraph& g);

/// Visits every configuration with at most `max_pairs` pairs: pairings of
/// the degree-3 vertices (leave-unpaired first, partners ascending), and for
/// each, every choice of one incident edge per vertex still of degree 3.
/// Throws std::invalid_argument if g has a vertex of degree > 3 or
/// max_pairs > floor(m/2).
void enumerate_configurations(const ColoredGraph& g, int max_pairs,
                              const std::function<void(const Configuration&)>& visit);

/// Number of configurations enumerate_configurations would visit (saturates
/// at UINT64_MAX).
std::uint64_t configuration_count(const ColoredGraph& g, int max_pairs);

struct Reduction {
  ColoredGraph reduced;
  int gain = 0;
};

/// Applies the shrinks in order and then the removals. Throws
/// std::logic_error if the result still has a degree-3 vertex or the gain
/// disagrees with the configuration.
Reduction apply_configuration(const ColoredGraph& g, const Configuration& c);

/// Upper bound on cyc from the pairwise DCJ distances between the color
/// classes: a median is at total distance >= half their sum.
int triangle_upper_bound(const ColoredGraph& g);

struct SolveOptions {
  /// Pairs per configuration; defaults to floor(m/2), which is always exact.
  std::optional<int> max_pairs;
  /// Treat a smaller max_pairs as sufficient for this instance.
  bool assume_pair_bound = false;
  int jobs = 1;
};

struct GraphMedian {
  std::vector<VertexPair> matching;
  int cyc = 0;
  int degree3 = 0;
  int max_pairs = 0;
  bool pairs_complete = true;  // the pair budget covers every degree-3 vertex
  /// Configurations left after isolated triple-edge pairs are matched
  /// directly.
  std::uint64_t configurations = 0;
  std::uint64_t explored = 0;
};

/// Best configuration value over the graph, with the deterministic
/// tie-break: smallest decision sequence among the optima. Below the full
/// pair budget a configuration is scored by the cycles its lifted matching
/// makes in g, which is never less than its own value.
GraphMedian solve_graph_median(const ColoredGraph& g, SolveOptions options = {});

struct MedianResult {
  std::vector<VertexPair> matching;
  Genome genome;
  int cyc_total = 0;
  std::vector<int> cyc_per_color;
  int cost = 0;
  bool exact = false;
  int lower_bound = 0;
  int upper_bound = 0;
  int degree3 = 0;
  int max_pairs = 0;
  int edges_removed = 0;  // heuristic removals in median_with_bounds
  std::uint64_t configurations = 0;
  std::uint64_t explored = 0;
};

/// Exact median of three genomes on the same genes.
/// Throws InvalidInstance on a genome count other than 3 or mismatched n.
MedianResult solve_median(std::span<const Genome> genomes, SolveOptions options = {});

/// Drops edges at degree-3 vertices until at most `max_deg3` remain, solves
/// the rest exactly and reports certified bounds for the full instance.
MedianResult median_with_bounds(std::span<const Genome> genomes, int max_deg3,
                                SolveOptions options = {});

/// The greedy removals median_with_bounds makes, in order.
std::vector<ColoredEdge> heuristic_removals(const ColoredGraph& g, int max_deg3);

}  // namespace dcjmedian
