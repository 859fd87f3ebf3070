#include <random>

#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace gpnt;

namespace {

PersistenceDiagram dgm(std::vector<Bar> bars) { return PersistenceDiagram(std::move(bars)); }

}  // namespace

TEST(Bottleneck, Examples) {
  auto a = dgm({{0, 0, 2}, {0, 1, 5}, {0, 0, kInfinity}});
  EXPECT_EQ(bottleneck(a, a, 0), 0);
  EXPECT_EQ(bottleneck(dgm({{0, 0, 2}}), dgm({}), 0), 1);
  EXPECT_EQ(bottleneck(dgm({{0, 0, 4}}), dgm({{0, 0, 2}}), 0), 2);
}

TEST(Bottleneck, OnlyRequestedDimensionCounts) {
  auto a = dgm({{0, 0, 2}, {1, 0, 10}});
  auto b = dgm({{0, 0, 2}});
  EXPECT_EQ(bottleneck(a, b, 0), 0);
  EXPECT_EQ(bottleneck(a, b, 1), 5);
}

TEST(Bottleneck, EssentialBars) {
  EXPECT_TRUE(std::isinf(bottleneck(dgm({{0, 0, kInfinity}}), dgm({}), 0)));
  EXPECT_EQ(bottleneck(dgm({{0, 1, kInfinity}, {0, 5, kInfinity}}), dgm({{0, 4, kInfinity}, {0, 0, kInfinity}}), 0), 1);
  EXPECT_EQ(bottleneck(dgm({{0, 1, kInfinity}, {0, 0, 1}}), dgm({{0, 3, kInfinity}}), 0), 2);
}

TEST(Bottleneck, ZeroLengthBarsAreDropped) {
  EXPECT_TRUE(dgm({{0, 2, 2}}).empty());
}

TEST(Bottleneck, AgreesWithExhaustiveOracle) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = oracle::random_diagram(rng, 4, 2);
    auto b = oracle::random_diagram(rng, 4, 2);
    Scale ours = bottleneck(a, b, 0), ref = oracle::bottleneck(a, b, 0);
    if (std::isinf(ref)) { EXPECT_TRUE(std::isinf(ours)); }
    else EXPECT_EQ(ours, ref) << trial;
  }
}

TEST(Bottleneck, MetricAxioms) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    auto a = oracle::random_diagram(rng, 4, 1);
    auto b = oracle::random_diagram(rng, 4, 1);
    auto c = oracle::random_diagram(rng, 4, 1);
    Scale ab = bottleneck(a, b, 0), ba = bottleneck(b, a, 0);
    EXPECT_EQ(ab, ba);
    EXPECT_EQ(bottleneck(a, a, 0), 0);
    EXPECT_EQ(ab == 0, a == b);
    Scale ac = bottleneck(a, c, 0), cb = bottleneck(c, b, 0);
    EXPECT_LE(ab, ac + cb);
  }
}

TEST(Shift, TranslatesBothCoordinates) {
  auto d = dgm({{0, 0, 2}, {1, 1, kInfinity}});
  EXPECT_EQ(d.shifted(1).bars, (std::vector<Bar>{{0, 1, 3}, {1, 2, kInfinity}}));
  EXPECT_EQ(d.shifted(0), d);
}

TEST(BoundCheck, WorkedFixture) {
  CoverAnalysis a(gen_e1());
  auto r = bound_check(a, 1);
  EXPECT_EQ(r.epsilon_star, 1);
  EXPECT_EQ(r.dB, 1);
  EXPECT_EQ(r.bound, 2);
  EXPECT_TRUE(r.verdict);
  EXPECT_TRUE(r.blowup_matches_space);
  EXPECT_TRUE(r.flag_matches_nerve);
  EXPECT_EQ(r.diagrams.space.in_dim(1).bars, (std::vector<Bar>{{1, 0, 2}}));
  EXPECT_TRUE(r.diagrams.nerve.in_dim(1).empty());
  EXPECT_LE(r.shifted_dB, r.shifted_bound);
}

TEST(BoundCheck, GoodCoverHasEqualDiagrams) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RandomParams p;
    p.elements = 4;
    CoverAnalysis a(gen_random(seed, p));
    auto r = bound_check(a, 2);
    EXPECT_EQ(r.epsilon_star, 0);
    EXPECT_EQ(r.diagrams.space, r.diagrams.nerve);
    EXPECT_EQ(r.dB, 0);
    EXPECT_EQ(r.shifted_dB, 0);
    EXPECT_EQ(r.shifted_nerve, r.diagrams.nerve);
  }
}

TEST(BoundCheck, TightSmallestDimensionZero) {
  CoverAnalysis a(gen_tight(1));
  auto r = bound_check(a, 0);
  EXPECT_EQ(r.epsilon_star, 2);
  EXPECT_EQ(r.dB, 2);
  EXPECT_TRUE(r.verdict);
  // Unreduced: the essential class sits at birth 0 on both sides.
  EXPECT_EQ(r.diagrams.space.bars, (std::vector<Bar>{{0, 0, 4}, {0, 0, kInfinity}}));
  EXPECT_EQ(r.diagrams.nerve.bars, (std::vector<Bar>{{0, 0, 2}, {0, 0, kInfinity}}));
  EXPECT_EQ(r.shifted_nerve.bars, (std::vector<Bar>{{0, 1, 3}, {0, 1, kInfinity}}));
  // The shifted essential bar is one unit late, the finite bar one unit off at each end.
  EXPECT_EQ(r.shifted_dB, 1);
  EXPECT_EQ(r.shifted_bound, 1);
  EXPECT_TRUE(r.shifted_verdict);
}

TEST(BoundCheck, InfiniteEpsilonIsInformational) {
  CoverFiltration c;
  c.vertex_count = 3;
  c.elements.push_back(Filtration::close_and_validate({{Simplex{0, 1}, 0}, {Simplex{1, 2}, 0}, {Simplex{0, 2}, 0}}));
  c.names = {"U0"};
  CoverAnalysis a(c);
  auto r = bound_check(a, 1);
  EXPECT_TRUE(std::isinf(r.epsilon_star));
  EXPECT_TRUE(std::isinf(r.bound));
  EXPECT_TRUE(guarantees_hold(r));
}
