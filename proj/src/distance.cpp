#include "dcjmedian/distance.hpp"

#include <array>
#include <stdexcept>

#include "dcjmedian/colored_graph.hpp"

namespace dcjmedian {

std::string DistanceValue::to_string() const {
  if (is_integer()) return std::to_string(halves_ / 2);
  return std::to_string(halves_) + "/2";
}

SizeLimit SizeLimit::of(int limit) {
  if (limit < 1) throw std::invalid_argument("size limit must be at least 1");
  return SizeLimit(limit, false);
}

PairCensus pair_census(const Genome& g1, const Genome& g2) {
  if (g1.gene_count() != g2.gene_count())
    throw std::invalid_argument("genomes have different gene counts");
  const std::array<Genome, 2> pair{g1, g2};
  PairCensus out;
  out.n = g1.gene_count();
  for (const auto& comp : components(build_breakpoint_graph(pair))) {
    const int size = static_cast<int>(comp.size());
    if (comp.is_cycle()) {
      ++out.cycles;
      out.cycle_sizes.push_back(size);
      if (size == 2) ++out.two_cycles;
    } else if (comp.odd()) {
      ++out.odd_paths;
      out.odd_path_sizes.push_back(size);
      if (size == 1) ++out.one_paths;
    }
  }
  return out;
}

DistanceValue dcj_distance(const Genome& g1, const Genome& g2) {
  const auto c = pair_census(g1, g2);
  return DistanceValue::from_halves(2 * c.n - 2 * c.cycles - c.odd_paths);
}

DistanceValue bp_distance(const Genome& g1, const Genome& g2) {
  const auto c = pair_census(g1, g2);
  return DistanceValue::from_halves(2 * c.n - 2 * c.two_cycles - c.one_paths);
}

DistanceValue dij_distance(const Genome& g1, const Genome& g2, SizeLimit i, SizeLimit j) {
  const auto c = pair_census(g1, g2);
  int cycles = 0;
  for (int s : c.cycle_sizes) cycles += i.is_infinite() || s <= 2 * i.value();
  int paths = 0;
  for (int s : c.odd_path_sizes) paths += j.is_infinite() || s <= 2 * j.value() - 1;
  return DistanceValue::from_halves(2 * c.n - 2 * cycles - paths);
}

}  // namespace dcjmedian
