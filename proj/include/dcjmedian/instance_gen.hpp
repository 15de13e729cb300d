#pragma once

#include <cstdint>
#include <vector>

#include "dcjmedian/genome.hpp"

namespace dcjmedian {

struct GenSpec {
  int n = 1;
  int genomes = 3;
  GenomeShape shape = GenomeShape::circular;
  /// Chance that a mixed genome loses a given adjacency; 0 keeps mixed
  /// genomes circular.
  double telomere_prob = 0.0;
  std::uint64_t seed = 0;
};

/// Each genome pairs up a seeded shuffle of the 2n extremities. Circular
/// genomes keep every pair, mixed ones drop each pair with telomere_prob,
/// linear ones do the same and then open every remaining circle at one
/// random adjacency. Same spec, same genomes.
/// Throws std::invalid_argument for n < 1, genomes < 1 or a probability
/// outside [0, 1].
std::vector<Genome> generate(const GenSpec& spec);

/// Three genomes whose breakpoint graph has exactly `degree3` vertices of
/// degree 3 (all others miss at least one color). Every vertex outside the
/// chosen set misses one random color, and each further color with
/// `extra_telomere_prob`. degree3 must lie in [0, 2n].
std::vector<Genome> generate_bounded_degree(int n, int degree3, std::uint64_t seed,
                                            double extra_telomere_prob = 0.0);

}  // namespace dcjmedian
