#include <gtest/gtest.h>

#include "dcjmedian/colored_graph.hpp"
#include "dcjmedian/instance_gen.hpp"
#include "dcjmedian/median_deg3.hpp"

using namespace dcjmedian;

TEST(Generate, Deterministic) {
  const GenSpec spec{.n = 20, .genomes = 3, .shape = GenomeShape::mixed, .telomere_prob = 0.2, .seed = 7};
  EXPECT_EQ(generate(spec), generate(spec));
  auto other = spec;
  other.seed = 8;
  EXPECT_NE(generate(spec), generate(other));
}

TEST(Generate, Shapes) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (auto shape : {GenomeShape::circular, GenomeShape::linear}) {
      const auto gs = generate({.n = 6, .genomes = 4, .shape = shape, .telomere_prob = 0.3, .seed = seed});
      ASSERT_EQ(gs.size(), 4u);
      for (std::size_t i = 0; i < gs.size(); ++i) {
        EXPECT_EQ(gs[i].shape(), shape);
        EXPECT_EQ(gs[i].gene_count(), 6);
        EXPECT_EQ(gs[i].name(), "G" + std::to_string(i + 1));
      }
    }
    const auto closed = generate({.n = 6, .shape = GenomeShape::mixed, .telomere_prob = 0.0, .seed = seed});
    for (const auto& g : closed) EXPECT_EQ(g.shape(), GenomeShape::circular);
  }
}

TEST(Generate, RejectsBadSpecs) {
  EXPECT_THROW(generate({.n = 0}), std::invalid_argument);
  EXPECT_THROW(generate({.n = 2, .genomes = 0}), std::invalid_argument);
  EXPECT_THROW(generate({.n = 2, .telomere_prob = 1.5}), std::invalid_argument);
  EXPECT_THROW(generate_bounded_degree(3, 7, 0), std::invalid_argument);
}

TEST(GenerateBoundedDegree, ExactDegreeThreeCount) {
  for (int d : {0, 1, 4, 9, 20}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto gs = generate_bounded_degree(10, d, seed, 0.2);
      ASSERT_EQ(gs.size(), 3u);
      EXPECT_EQ(static_cast<int>(degree3_vertices(build_breakpoint_graph(gs)).size()), d);
      EXPECT_EQ(gs, generate_bounded_degree(10, d, seed, 0.2));
    }
  }
}
