#include <gtest/gtest.h>

#include "mcsg/collinear.hpp"
#include "mcsg/core.hpp"
#include "mcsg/exact2.hpp"
#include "mcsg/oracle.hpp"

using namespace mcsg;

namespace {
const ColorSet R = ColorSet::of({1});
const ColorSet B = ColorSet::of({2});
const ColorSet RB = ColorSet::of({1, 2});

Instance line(std::vector<std::pair<double, ColorSet>> pts, int k = 2) {
  Instance inst;
  inst.k = k;
  for (auto& [x, c] : pts) inst.points.push_back({x, 0.0, c});
  return inst;
}

const OracleBudget kBudget{28, 120.0};
}  // namespace

TEST(NormalizeStar, Examples) {
  Instance rbr = line({{0, R}, {1, B}, {2, R}});
  EXPECT_EQ(normalize_star(rbr, {Edge(0, 2)}), (EdgeSet{Edge(0, 2)}));
  Instance rrr = line({{0, R}, {1, R}, {2, R}});
  EdgeSet split = normalize_star(rrr, {Edge(0, 2)});
  std::sort(split.begin(), split.end());
  EXPECT_EQ(split, (EdgeSet{Edge(0, 1), Edge(1, 2)}));
  EXPECT_DOUBLE_EQ(solution_cost(rrr, split), 2.0);
}

TEST(CutEdges, Examples) {
  Instance inst = line({{0, RB}, {1, R}, {2, RB}});
  auto cut = cut_edges(inst, 1, {R});
  ASSERT_TRUE(cut);
  EXPECT_EQ(cut->edges, (EdgeSet{Edge(0, 1)}));
  auto both = cut_edges(inst, 1, {RB});
  ASSERT_TRUE(both);
  EXPECT_EQ(both->edges, (EdgeSet{Edge(0, 2)}));
  Instance rr = line({{0, R}, {1, R}});
  EXPECT_FALSE(cut_edges(rr, 1, {B}));
  // endpoints share more colors than the set
  Instance bb = line({{0, RB}, {1, RB}});
  EXPECT_FALSE(cut_edges(bb, 1, {R}));
}

TEST(CutEdges, Validity) {
  Instance inst = line({{0, RB}, {1, R}, {2, RB}});
  auto cut = cut_edges(inst, 1, {R, RB});
  ASSERT_TRUE(cut);
  EXPECT_TRUE(is_valid_cut(inst, *cut));
}

TEST(Compatible, DroppedEdgeMustTouchPi) {
  Instance inst = line({{0, R}, {1, B}, {2, B}, {3, R}});
  auto prev = cut_edges(inst, 1, {R});
  auto next = cut_edges(inst, 2, {});
  ASSERT_TRUE(prev && next);
  EXPECT_EQ(prev->edges, (EdgeSet{Edge(0, 3)}));
  EXPECT_FALSE(compatible(inst, *prev, *next));
  auto keep = cut_edges(inst, 2, {R});
  ASSERT_TRUE(keep);
  EXPECT_TRUE(compatible(inst, *prev, *keep));
}

TEST(HatPi, EdgesEndingAtPiAreRelated) {
  Instance inst = line({{0, RB}, {1, R}, {2, RB}, {3, R}});
  auto prev = cut_edges(inst, 2, {R, RB});
  auto next = cut_edges(inst, 3, {R});
  ASSERT_TRUE(prev && next);
  EXPECT_EQ(prev->edges, (EdgeSet{Edge(1, 2), Edge(0, 2)}));
  PartitionVector hat = hat_pi(inst, *prev, *next, {{0}, {}});
  EXPECT_EQ(hat[0], (std::vector<int>{0, 0}));
  EXPECT_EQ(hat[1], (std::vector<int>{0}));
}

TEST(HatPi, PersistingEdgesFollowNextPartition) {
  Instance inst = line({{0, RB}, {1, R}, {2, B}, {3, R}, {4, RB}});
  auto prev = cut_edges(inst, 2, {R, RB});
  auto next = cut_edges(inst, 3, {R, RB});
  ASSERT_TRUE(prev && next);
  EXPECT_EQ(prev->edges, (EdgeSet{Edge(1, 3), Edge(0, 4)}));
  EXPECT_EQ(next->edges, prev->edges);
  EXPECT_EQ(hat_pi(inst, *prev, *next, {{0, 0}, {0}})[0], (std::vector<int>{0, 0}));
  EXPECT_EQ(hat_pi(inst, *prev, *next, {{0, 1}, {0}})[0], (std::vector<int>{0, 1}));
}

TEST(Bell, Numbers) {
  std::vector<std::uint64_t> want{1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (int t = 0; t <= 8; ++t) EXPECT_EQ(bell_number(t), want[t]);
}

TEST(DpSolve, Examples) {
  Instance one = line({{0, R}}, 1);
  EXPECT_EQ(dp_solve(one).cost, 0.0);

  Instance rbr = line({{0, R}, {1, B}, {2, R}});
  Solution s = dp_solve(rbr);
  EXPECT_EQ(s.edges, (EdgeSet{Edge(0, 2)}));
  EXPECT_DOUBLE_EQ(s.cost, 2.0);

  Instance x013 = line({{0, RB}, {1, R}, {3, RB}});
  EXPECT_TRUE(costs_equal(dp_solve(x013).cost, brute_force(x013).cost));
  EXPECT_TRUE(costs_equal(dp_solve(x013).cost, 4.0));
}

TEST(DpSolve, SortsInput) {
  Instance inst = line({{2, R}, {0, R}, {1, B}});
  Solution s = dp_solve(inst);
  EXPECT_TRUE(is_csg(inst, s.edges));
  EXPECT_DOUBLE_EQ(s.cost, 2.0);
}

TEST(DpSolve, MatchesExact2) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Instance inst = generate_collinear(3 + static_cast<int>(seed % 10), 2, 0.4, seed);
    EXPECT_TRUE(costs_equal(dp_solve(inst).cost, solve_exact2(inst).cost)) << seed;
  }
}

TEST(DpSolve, MatchesOracleK3) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Instance inst = generate_collinear(3 + static_cast<int>(seed % 5), 3, 0.4, seed);
    double opt = brute_force(inst, kBudget).cost;
    EXPECT_TRUE(costs_equal(dp_solve(inst).cost, opt)) << seed;
    OracleOptions star;
    star.star_only = true;
    EXPECT_TRUE(costs_equal(brute_force(inst, kBudget, star).cost, opt)) << seed;
  }
}

TEST(DpSolve, StatsWithinBellBound) {
  Instance inst = generate_collinear(200, 3, 0.3, 11);
  DpStats stats;
  dp_solve(inst, {}, &stats);
  EXPECT_EQ(stats.cuts.size(), 199u);
  for (const CutStats& c : stats.cuts) {
    EXPECT_LE(c.max_ground, 4);
    EXPECT_LE(c.max_partition_vectors, 15u * 15u * 15u);
  }
}

TEST(DpSolve, Guards) {
  Instance inst = generate_collinear(5, 4, 0.3, 1);
  DpOptions opts;
  opts.k_guard = 3;
  EXPECT_THROW(dp_solve(inst, opts), Refusal);
  Instance bent = line({{0, R}, {1, R}});
  bent.points.push_back({0.5, 1.0, R});
  EXPECT_THROW(dp_solve(bent), InputError);
}
