#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "dcjmedian/colored_graph.hpp"
#include "dcjmedian/oracle.hpp"
#include "support/graphs.hpp"

using namespace dcjmedian;
using namespace dcjmedian::testing;

TEST(BreakpointGraph, FourGenesThreeGenomes) {
  const auto gs = parse(">A\nC 1 2\nL 4 -3\n>B\nC 1 2 3 4\n>C\nL 1 -2 3 4\n");
  const auto b = build_breakpoint_graph(gs);
  EXPECT_EQ(b.vertex_count(), 8);
  EXPECT_EQ(b.color_count(), 3);
  EXPECT_EQ(b.edge_count(0), 3u);
  EXPECT_EQ(b.edge_count(1), 4u);
  EXPECT_EQ(b.edge_count(2), 3u);
}

TEST(BreakpointGraph, IdenticalCirclesGiveTripleEdges) {
  const auto gs = parse(">A\nC 1 2\n>B\nC 1 2\n>C\nC 1 2\n");
  const auto b = build_breakpoint_graph(gs);
  EXPECT_EQ(b.vertex_count(), 4);
  for (VertexId v : b.vertices()) EXPECT_EQ(b.degree(v), 3);
  EXPECT_EQ(b.multiplicity(1, 2), 3);
  EXPECT_EQ(b.multiplicity(3, 0), 3);
}

TEST(BreakpointGraph, SingleGenome) {
  const auto b = build_breakpoint_graph(parse(">A\nC 1 2\n"));
  EXPECT_EQ(b.vertex_count(), 4);
  EXPECT_EQ(b.edge_count(), 2u);
  EXPECT_EQ(b.color_count(), 1);
}

TEST(ColoredGraph, EnforcesColorMatching) {
  ColoredGraph g(4, 2);
  g.add_edge(0, 1, 0);
  EXPECT_THROW(g.add_edge(1, 2, 0), std::invalid_argument);
  EXPECT_THROW(g.add_edge(2, 2, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(2, 7, 1), std::invalid_argument);
  g.add_edge(0, 1, 1);
  EXPECT_EQ(g.multiplicity(0, 1), 2);
  EXPECT_EQ(g.max_degree(), 2);
}

TEST(Components, TwoCirclesDifferingByOneInversion) {
  const auto gs = parse(">A\nC 1 2 3\n>B\nC 1 -2 3\n");
  const auto comps = components(build_breakpoint_graph(gs));
  ASSERT_EQ(comps.size(), 2u);
  std::vector<std::size_t> sizes;
  for (const auto& c : comps) {
    EXPECT_TRUE(c.is_cycle());
    sizes.push_back(c.size());
  }
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{2, 4}));
}

TEST(Components, IsolatedVerticesArePaths) {
  const auto comps = components(ColoredGraph(4, 3));
  ASSERT_EQ(comps.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(comps[i].kind, ComponentKind::path);
    EXPECT_EQ(comps[i].vertices, (std::vector<VertexId>{static_cast<VertexId>(i)}));
  }
}

TEST(Components, TwoCycleAndOrientation) {
  ColoredGraph g(6, 3);
  g.add_edge(4, 5, 2);
  g.add_edge(4, 5, 0);
  g.add_edge(3, 1, 1);
  g.add_edge(1, 0, 0);
  const auto comps = components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0].vertices, (std::vector<VertexId>{0, 1, 3}));  // path from its smaller end
  EXPECT_EQ(comps[0].edge_colors, (std::vector<Color>{0, 1}));
  EXPECT_EQ(comps[1].vertices, (std::vector<VertexId>{2}));
  EXPECT_TRUE(comps[2].is_cycle());
  EXPECT_EQ(comps[2].edge_colors, (std::vector<Color>{0, 2}));
  EXPECT_THROW(components(build_breakpoint_graph(parse(">A\nC 1\n>B\nC 1\n>C\nC 1\n"))), std::invalid_argument);
}

TEST(Components, CycleStartsAtMinimumTowardSmallerNeighbor) {
  ColoredGraph g(5, 3);
  const std::vector<VertexId> ring{3, 0, 4, 1, 2};
  const std::vector<Color> col{0, 1, 2, 0, 1};
  for (std::size_t i = 0; i < ring.size(); ++i) g.add_edge(ring[i], ring[(i + 1) % ring.size()], col[i]);
  const auto comps = components(g);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].vertices, (std::vector<VertexId>{0, 3, 2, 1, 4}));
}

TEST(Shrink, FourCycleBecomesTwoCycle) {
  const auto g = cycle_graph({0, 1, 0, 1});
  const auto r = shrink(g, 0, 1);
  EXPECT_EQ(r.k, 1);
  EXPECT_EQ(r.graph.vertex_count(), 2);
  EXPECT_EQ(r.graph.multiplicity(2, 3), 2);
  EXPECT_EQ(exhaustive_median(g).cyc, exhaustive_median(r.graph).cyc + r.k);
}

TEST(Shrink, IsolatedPairAndTripleEdge) {
  const auto r = shrink(ColoredGraph(2, 3), 0, 1);
  EXPECT_EQ(r.k, 0);
  EXPECT_EQ(r.graph.vertex_count(), 0);
  ColoredGraph t(2, 3);
  for (Color c = 0; c < 3; ++c) t.add_edge(0, 1, c);
  const auto s = shrink(t, 0, 1);
  EXPECT_EQ(s.k, 3);
  EXPECT_EQ(s.graph.vertex_count(), 0);
  EXPECT_EQ(s.graph.edge_count(), 0u);
  EXPECT_THROW(shrink(s.graph, 0, 1), std::invalid_argument);
}

TEST(Shrink, SplicesOnlyWhenBothSidesHaveTheColor) {
  ColoredGraph g(6, 3);
  g.add_edge(0, 2, 0);
  g.add_edge(1, 3, 0);
  g.add_edge(0, 4, 1);  // v has no color-1 edge: this one disappears
  g.add_edge(1, 5, 2);
  const auto r = shrink(g, 0, 1);
  EXPECT_EQ(r.k, 0);
  EXPECT_TRUE(r.graph.has_edge(2, 3, 0));
  EXPECT_EQ(r.graph.degree(4), 0);
  EXPECT_EQ(r.graph.degree(5), 0);
}

TEST(RemoveEdge, Examples) {
  ColoredGraph t(2, 3);
  for (Color c = 0; c < 3; ++c) t.add_edge(0, 1, c);
  const auto d = remove_edge(t, 0, 1, 1);
  EXPECT_EQ(d.multiplicity(0, 1), 2);
  EXPECT_EQ(d.degree(0), 2);
  const auto p = remove_edge(path_graph({2}), 0, 1, 2);
  EXPECT_EQ(p.vertex_count(), 2);
  EXPECT_EQ(p.edge_count(), 0u);
  EXPECT_THROW(remove_edge(p, 0, 1, 2), std::invalid_argument);
}

TEST(Signatures, Examples) {
  const auto c4 = components(cycle_graph({0, 1, 0, 1})).at(0);
  EXPECT_EQ(signatures(c4), (std::vector<Signature>{{1, 0}, {0, 1}, {1, 0}, {0, 1}}));
  const auto c2 = components(cycle_graph({0, 1})).at(0);
  const auto s2 = signatures(c2);
  EXPECT_EQ(s2, (std::vector<Signature>{{1, 0}, {0, 1}}));
  EXPECT_TRUE(s2[0].diagonal_to(s2[1]));
  EXPECT_THROW(signatures(components(path_graph({0, 1})).at(0)), std::invalid_argument);
}

TEST(Signatures, ReversalSwapsEverySignature) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto colors = random_colors(static_cast<std::size_t>(2 + trial % 9), true, rng);
    ComponentView c = components(cycle_graph(colors)).at(0);
    ComponentView r = c;
    std::reverse(r.vertices.begin(), r.vertices.end());
    r.edge_colors.assign(c.edge_colors.rbegin(), c.edge_colors.rend());
    // reversed traversal: vertex i then goes to i-1 over the edge (i-1, i)
    std::rotate(r.edge_colors.begin(), r.edge_colors.begin() + 1, r.edge_colors.end());
    const auto fwd = signatures(c);
    const auto bwd = signatures(r);
    for (std::size_t i = 0; i < fwd.size(); ++i) EXPECT_EQ(bwd[fwd.size() - 1 - i], fwd[i].swapped());
  }
}

TEST(CountCycles, Examples) {
  ColoredGraph c2(2, 2);
  c2.add_edge(0, 1, 0);
  c2.add_edge(0, 1, 1);
  const std::vector<VertexPair> m{{0, 1}};
  EXPECT_EQ(count_alternating_cycles(c2, std::span<const VertexPair>(m)).total, 2);
  EXPECT_EQ(count_alternating_cycles(ColoredGraph(0, 3), std::span<const VertexPair>()).total, 0);

  const auto gs = parse(">A\nC 1 2\n>B\nC 1 -2\n>C\nC 1\nC 2\n");
  const auto b = build_breakpoint_graph(gs);
  const auto g1 = gs[0].adjacencies();
  const auto r = count_alternating_cycles(b, std::span<const VertexPair>(g1));
  EXPECT_EQ(r.total, 4);
  EXPECT_EQ(r.per_color, (std::vector<int>{2, 1, 1}));
  const std::vector<VertexPair> partial{{0, 1}};
  EXPECT_THROW(count_alternating_cycles(b, std::span<const VertexPair>(partial)), std::invalid_argument);
}

TEST(ShrinkProperty, PreservesInvariantsAndDegrees) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = random_matching_graph(2 + 2 * (trial % 8), rng);
    const auto verts = g.vertices();
    std::uniform_int_distribution<std::size_t> pick(0, verts.size() - 1);
    VertexId u = verts[pick(rng)], v = verts[pick(rng)];
    if (u == v) continue;
    const auto r = shrink(g, u, v);
    EXPECT_EQ(r.graph.vertex_count(), g.vertex_count() - 2);
    EXPECT_EQ(r.k, g.multiplicity(u, v));
    for (VertexId w : r.graph.vertices()) {
      EXPECT_LE(r.graph.degree(w), g.degree(w));
      for (Color c = 0; c < 3; ++c) {
        const VertexId x = r.graph.neighbor(w, c);
        if (x != kNoVertex) EXPECT_EQ(r.graph.neighbor(x, c), w);
      }
    }
  }
}

TEST(ShrinkProperty, OrderIndependence) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    const auto g = random_matching_graph(8 + 2 * (trial % 3), rng);
    auto verts = g.vertices();
    std::shuffle(verts.begin(), verts.end(), rng);
    std::vector<VertexPair> pairs{{verts[0], verts[1]}, {verts[2], verts[3]}, {verts[4], verts[5]}};
    std::sort(pairs.begin(), pairs.end());
    std::optional<int> first;
    do {
      ColoredGraph h = g;
      int k = 0;
      for (const auto& p : pairs) k += h.shrink_in_place(p.a, p.b);
      const int total = k + exhaustive_median(h).cyc;
      if (!first) first = total;
      EXPECT_EQ(total, *first);
    } while (std::next_permutation(pairs.begin(), pairs.end()));
  }
}

TEST(CountCyclesProperty, AgreesWithUnionFindCounter) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const int v = 2 + 2 * (trial % 10);
    const auto g = random_matching_graph(v, rng);
    std::vector<VertexId> order = g.vertices();
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<VertexPair> m;
    for (std::size_t i = 0; i < order.size(); i += 2) m.emplace_back(order[i], order[i + 1]);
    const auto a = count_alternating_cycles(g, std::span<const VertexPair>(m));
    EXPECT_EQ(a.total, union_find_cycle_count(g, m));
    EXPECT_EQ(a.total, count_alternating_cycles(g, std::span<const VertexPair>(m)).total);
    int sum = 0;
    for (int x : a.per_color) sum += x;
    EXPECT_EQ(sum, a.total);
  }
}

TEST(CanonicalKey, InvariantUnderRotationAndReflection) {
  EXPECT_EQ(canonical_key(components(cycle_graph({0, 1, 2, 0, 1, 2})).at(0)),
            canonical_key(components(cycle_graph({2, 1, 0, 2, 1, 0})).at(0)));
  EXPECT_EQ(canonical_key(components(cycle_graph({0, 1, 0, 2})).at(0)),
            canonical_key(components(cycle_graph({0, 2, 0, 1})).at(0)));
  EXPECT_NE(canonical_key(components(cycle_graph({0, 1, 0, 1})).at(0)),
            canonical_key(components(cycle_graph({0, 1, 0, 2})).at(0)));
  EXPECT_EQ(canonical_key(components(path_graph({0, 1, 2})).at(0)),
            canonical_key(components(path_graph({2, 1, 0})).at(0)));
  EXPECT_NE(canonical_key(components(path_graph({0, 1})).at(0)),
            canonical_key(components(cycle_graph({0, 1})).at(0)));
}
