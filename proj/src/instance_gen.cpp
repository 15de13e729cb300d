#include "dcjmedian/instance_gen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace dcjmedian {

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0, 1]");
}

std::string genome_name(int i) { return "G" + std::to_string(i + 1); }

// Opens every circular chromosome by dropping one of its adjacencies.
void break_circles(int n, MateArray& mate, std::mt19937_64& rng) {
  std::vector<char> seen(mate.size(), 0);
  for (int gene = 1; gene <= n; ++gene) {
    const VertexId start = Extremity{gene, Side::tail}.id();
    if (seen[static_cast<std::size_t>(start)]) continue;
    // walk gene by gene: v -> other extremity of its gene -> its mate
    std::vector<VertexId> adjacency_ends;
    VertexId v = start;
    bool circular = true;
    while (true) {
      seen[static_cast<std::size_t>(v)] = 1;
      const VertexId w = v ^ 1;
      seen[static_cast<std::size_t>(w)] = 1;
      const VertexId next = mate[static_cast<std::size_t>(w)];
      if (next == kNoVertex) {
        circular = false;
        break;
      }
      adjacency_ends.push_back(w);
      if (next == start) break;
      v = next;
    }
    if (!circular) {
      // the chromosome is linear; mark its other half as well
      VertexId u = mate[static_cast<std::size_t>(start)];
      while (u != kNoVertex && !seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = seen[static_cast<std::size_t>(u ^ 1)] = 1;
        u = mate[static_cast<std::size_t>(u ^ 1)];
      }
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick(0, adjacency_ends.size() - 1);
    const VertexId a = adjacency_ends[pick(rng)];
    const VertexId b = mate[static_cast<std::size_t>(a)];
    mate[static_cast<std::size_t>(a)] = kNoVertex;
    mate[static_cast<std::size_t>(b)] = kNoVertex;
  }
}

}  // namespace

std::vector<Genome> generate(const GenSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("gene count must be at least 1");
  if (spec.genomes < 1) throw std::invalid_argument("genome count must be at least 1");
  check_probability(spec.telomere_prob);
  std::mt19937_64 rng(spec.seed);
  std::bernoulli_distribution drop(spec.telomere_prob);
  const int v = 2 * spec.n;
  std::vector<Genome> out;
  for (int i = 0; i < spec.genomes; ++i) {
    std::vector<VertexId> order(static_cast<std::size_t>(v));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    MateArray mate(static_cast<std::size_t>(v), kNoVertex);
    for (std::size_t k = 0; k + 1 < order.size(); k += 2) {
      if (spec.shape != GenomeShape::circular && drop(rng)) continue;
      mate[static_cast<std::size_t>(order[k])] = order[k + 1];
      mate[static_cast<std::size_t>(order[k + 1])] = order[k];
    }
    if (spec.shape == GenomeShape::linear) break_circles(spec.n, mate, rng);
    out.emplace_back(spec.n, std::move(mate), genome_name(i));
  }
  return out;
}

std::vector<Genome> generate_bounded_degree(int n, int degree3, std::uint64_t seed, double extra_telomere_prob) {
  if (n < 1) throw std::invalid_argument("gene count must be at least 1");
  check_probability(extra_telomere_prob);
  const int v = 2 * n;
  if (degree3 < 0 || degree3 > v) throw std::invalid_argument("degree-3 count must lie in [0, 2n]");
  std::mt19937_64 rng(seed);
  std::vector<VertexId> order(static_cast<std::size_t>(v));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<char> full(static_cast<std::size_t>(v), 0);
  for (int i = 0; i < degree3; ++i) full[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = 1;

  constexpr int kColors = 3;
  std::vector<std::array<char, kColors>> allowed(static_cast<std::size_t>(v));
  std::uniform_int_distribution<int> color(0, kColors - 1);
  std::bernoulli_distribution extra(extra_telomere_prob);
  for (VertexId x = 0; x < v; ++x) {
    auto& a = allowed[static_cast<std::size_t>(x)];
    a.fill(1);
    if (full[static_cast<std::size_t>(x)]) continue;
    a[static_cast<std::size_t>(color(rng))] = 0;
    for (auto& c : a)
      if (c && extra(rng)) c = 0;
  }

  std::vector<Genome> out;
  for (int c = 0; c < kColors; ++c) {
    std::vector<VertexId> pool;
    for (VertexId x = 0; x < v; ++x)
      if (allowed[static_cast<std::size_t>(x)][static_cast<std::size_t>(c)]) pool.push_back(x);
    std::shuffle(pool.begin(), pool.end(), rng);
    if (pool.size() % 2 == 1) {
      // leave out one vertex of degree < 3 so the chosen ones stay full
      auto it = std::find_if(pool.begin(), pool.end(), [&](VertexId x) { return !full[static_cast<std::size_t>(x)]; });
      if (it == pool.end()) throw std::invalid_argument("cannot keep an odd number of full vertices in every color");
      pool.erase(it);
    }
    MateArray mate(static_cast<std::size_t>(v), kNoVertex);
    for (std::size_t k = 0; k + 1 < pool.size(); k += 2) {
      mate[static_cast<std::size_t>(pool[k])] = pool[k + 1];
      mate[static_cast<std::size_t>(pool[k + 1])] = pool[k];
    }
    out.emplace_back(n, std::move(mate), genome_name(c));
  }
  return out;
}

}  // namespace dcjmedian
