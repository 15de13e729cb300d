#include <gtest/gtest.h>

#include "dcjmedian/distance.hpp"
#include "dcjmedian/instance_gen.hpp"
#include "support/graphs.hpp"

using namespace dcjmedian;
using dcjmedian::testing::parse;

TEST(DistanceValue, Formatting) {
  EXPECT_EQ(DistanceValue::from_halves(6).to_string(), "3");
  EXPECT_EQ(DistanceValue::from_halves(7).to_string(), "7/2");
  EXPECT_EQ(DistanceValue::from_halves(0).to_string(), "0");
  EXPECT_THROW(SizeLimit::of(0), std::invalid_argument);
}

TEST(Dcj, Examples) {
  const auto id = parse(">A\nC 1 2 3 4 5\n>B\nC 1 2 3 4 5\n");
  EXPECT_EQ(dcj_distance(id[0], id[1]).halves(), 0);
  const auto inv = parse(">A\nC 1 2 3\n>B\nC 1 -2 3\n");
  EXPECT_EQ(dcj_distance(inv[0], inv[1]).to_string(), "1");
  const auto lin = parse(">A\nL 1 2\n>B\nL 1 2\n");
  EXPECT_EQ(dcj_distance(lin[0], lin[1]).halves(), 0);
  const auto census = pair_census(lin[0], lin[1]);
  EXPECT_EQ(census.cycles, 1);
  EXPECT_EQ(census.odd_paths, 2);
  const auto a = parse(">A\nC 1 2\n");
  const auto b = parse(">B\nC 1 2 3\n");
  EXPECT_THROW(dcj_distance(a[0], b[0]), std::invalid_argument);
}

TEST(Bp, HalfIntegerValue) {
  // the shared telomere 1t counts for a half
  const auto gs = parse(">A\nL 1 2\n>B\nL 1 -2\n");
  EXPECT_EQ(bp_distance(gs[0], gs[1]).to_string(), "3/2");
  EXPECT_EQ(dcj_distance(gs[0], gs[1]).to_string(), "1");
}

TEST(Bp, Examples) {
  const auto id = parse(">A\nC 1 2 3\n>B\nC 1 2 3\n");
  EXPECT_EQ(bp_distance(id[0], id[1]).halves(), 0);
  const auto inv = parse(">A\nC 1 2 3\n>B\nC 1 -2 3\n");
  EXPECT_EQ(bp_distance(inv[0], inv[1]).to_string(), "2");
  const auto lin = parse(">A\nL 1 2\n>B\nL 1 2\n");
  EXPECT_EQ(bp_distance(lin[0], lin[1]).halves(), 0);
}

TEST(Dij, Examples) {
  const auto inv = parse(">A\nC 1 2 3\n>B\nC 1 -2 3\n");
  EXPECT_EQ(dij_distance(inv[0], inv[1], SizeLimit::of(1), SizeLimit::of(1)).to_string(), "2");
  EXPECT_EQ(dij_distance(inv[0], inv[1], SizeLimit::of(2), SizeLimit::of(1)).to_string(), "1");
  EXPECT_EQ(dij_distance(inv[0], inv[1], SizeLimit::infinite(), SizeLimit::infinite()),
            dcj_distance(inv[0], inv[1]));
}

TEST(DistanceProperty, FamilyOrderingSymmetryTriangle) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GenSpec spec;
    spec.n = 2 + static_cast<int>(seed % 15);
    spec.shape = static_cast<GenomeShape>(seed % 3);
    spec.telomere_prob = spec.shape == GenomeShape::circular ? 0.0 : 0.3;
    spec.seed = seed;
    const auto g = generate(spec);
    const auto inf = SizeLimit::infinite();
    for (std::size_t x = 0; x < 3; ++x) {
      EXPECT_EQ(dcj_distance(g[x], g[x]).halves(), 0);
      EXPECT_EQ(bp_distance(g[x], g[x]).halves(), 0);
      for (std::size_t y = 0; y < 3; ++y) {
        const auto d = dcj_distance(g[x], g[y]);
        const auto bp = bp_distance(g[x], g[y]);
        EXPECT_EQ(d, dcj_distance(g[y], g[x]));
        EXPECT_EQ(bp, bp_distance(g[y], g[x]));
        EXPECT_GE(d.halves(), 0);
        EXPECT_LE(d, bp);
        EXPECT_LE(bp.halves(), 2 * spec.n);
        EXPECT_EQ(dij_distance(g[x], g[y], SizeLimit::of(1), SizeLimit::of(1)), bp);
        EXPECT_EQ(dij_distance(g[x], g[y], inf, inf), d);
        const auto mid = dij_distance(g[x], g[y], SizeLimit::of(2), SizeLimit::of(2));
        EXPECT_LE(d, mid);
        EXPECT_LE(mid, bp);
      }
    }
    if (spec.shape == GenomeShape::circular)
      EXPECT_LE(dcj_distance(g[0], g[2]), dcj_distance(g[0], g[1]) + dcj_distance(g[1], g[2]));
  }
}
