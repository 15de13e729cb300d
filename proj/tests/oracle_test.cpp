#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "dcjmedian/errors.hpp"
#include "dcjmedian/oracle.hpp"
#include "support/graphs.hpp"

using namespace dcjmedian;
using namespace dcjmedian::testing;

TEST(Oracle, EnumeratesEveryPerfectMatching) {
  EXPECT_EQ(exhaustive_median(ColoredGraph(4, 3)).matchings_enumerated, 3u);
  EXPECT_EQ(exhaustive_median(ColoredGraph(4, 3)).cyc, 0);
  const auto empty = exhaustive_median(ColoredGraph(0, 3));
  EXPECT_EQ(empty.cyc, 0);
  EXPECT_TRUE(empty.matching.empty());
  for (int t = 0; t <= 5; ++t)
    EXPECT_EQ(exhaustive_median(ColoredGraph(2 * t, 3)).matchings_enumerated, perfect_matching_count(t));
  EXPECT_EQ(perfect_matching_count(7), 135135u);
}

TEST(Oracle, SmallShapes) {
  EXPECT_EQ(exhaustive_cyc(path_graph({0, 1, 0, 1})), 2);
  EXPECT_EQ(exhaustive_median(cycle_graph({0, 1, 0, 1})).cyc, 3);
  EXPECT_EQ(exhaustive_median(cycle_graph({0, 1, 2, 0, 1, 2})).cyc, 3);
  EXPECT_EQ(exhaustive_median(cycle_graph({0, 1})).cyc, 2);
  const auto g = cycle_graph({0, 1, 2});
  EXPECT_EQ(exhaustive_component_cyc(components(g)[0]), 1);
}

TEST(Oracle, Limits) {
  EXPECT_THROW(exhaustive_median(ColoredGraph(16, 3)), BudgetExceeded);
  EXPECT_NO_THROW(exhaustive_median(ColoredGraph(16, 3), {.max_vertices = 16}));
  EXPECT_THROW(exhaustive_median(ColoredGraph(3, 3)), std::invalid_argument);
}

TEST(Oracle, FirstStrictMaximumWins) {
  const auto r = exhaustive_median(cycle_graph({0, 1, 0, 1}));
  EXPECT_EQ(r.matching, (std::vector<VertexPair>{{0, 1}, {2, 3}}));
}

TEST(Oracle, CountersAgree) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_matching_graph(2 + 2 * (trial % 5), rng);
    auto verts = g.vertices();
    std::shuffle(verts.begin(), verts.end(), rng);
    std::vector<VertexPair> m;
    for (std::size_t i = 0; i + 1 < verts.size(); i += 2) m.emplace_back(verts[i], verts[i + 1]);
    EXPECT_EQ(union_find_cycle_count(g, m), count_alternating_cycles(g, std::span<const VertexPair>(m)).total);
  }
}

TEST(Oracle, RelabelingInvariant) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_matching_graph(4 + 2 * (trial % 4), rng);
    std::vector<VertexId> perm(static_cast<std::size_t>(g.universe_size()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(exhaustive_median(g).cyc, exhaustive_median(relabeled(g, perm)).cyc);
  }
}
