#include <gtest/gtest.h>

#include "mcsg/approx3.hpp"
#include "mcsg/core.hpp"
#include "mcsg/exact2.hpp"
#include "mcsg/mst.hpp"
#include "mcsg/oracle.hpp"

using namespace mcsg;

namespace {
double mst_cost(const Instance& inst) {
  std::vector<int> all(inst.n());
  for (int i = 0; i < inst.n(); ++i) all[i] = i;
  return solution_cost(inst, euclidean_mst(inst, all));
}
}  // namespace

TEST(Approx, Config) {
  ApproxConfig cfg;
  EXPECT_NEAR(cfg.ratio_a2(), 1.8155, 1e-4);
  EXPECT_NO_THROW(cfg.validate());
  cfg.steiner_ratio_bound = 0.9;
  EXPECT_THROW(cfg.validate(), InputError);
  cfg.steiner_ratio_bound = 2.5;
  EXPECT_THROW(cfg.validate(), InputError);
}

TEST(Approx, AllBlack) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Instance inst = generate_random(7, 3, 1.0, seed);
    for (Point& p : inst.points) p.colors = ColorSet::all(3);
    double t = mst_cost(inst);
    // both halves are the same tree, and the union is an edge set
    EXPECT_TRUE(costs_equal(approx_a1(inst).cost, t));
    EXPECT_TRUE(costs_equal(approx_a2(inst).cost, t));
  }
}

TEST(Approx, NoThirdColorPoints) {
  Instance inst = generate_random(6, 2, 0.5, 4);
  inst.k = 3;
  inst.points.push_back({0.5, 0.5, ColorSet::of({3})});
  EXPECT_TRUE(is_csg(inst, approx_a2(inst).edges));
}

TEST(Approx, PairingSingleColor) {
  Instance inst = generate_random(6, 1, 0.0, 9);
  EXPECT_TRUE(costs_equal(approx_pairing(inst, default_pairing(1)).cost, mst_cost(inst)));
  EXPECT_EQ(default_pairing(5), (std::vector<std::vector<int>>{{1, 2}, {3, 4}, {5}}));
}

TEST(Approx, DefaultPairingIsA1) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Instance inst = generate_random(6, 3, 0.5, seed);
    EXPECT_TRUE(costs_equal(approx_pairing(inst, {{1, 2}, {3}}).cost, approx_a1(inst).cost));
  }
}

TEST(Approx, Ratios) {
  ApproxConfig cfg;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Instance inst = generate_random(4 + static_cast<int>(seed % 3), 3, 0.5, seed);
    double opt = brute_force(inst).cost;
    CandidateBundle bundle;
    Solution a1 = approx_a1(inst, cfg);
    Solution a2 = approx_a2(inst, cfg, &bundle);
    EXPECT_TRUE(is_csg(inst, a1.edges));
    EXPECT_TRUE(is_csg(inst, a2.edges));
    EXPECT_TRUE(cost_leq(a1.cost, 2 * opt)) << seed;
    EXPECT_TRUE(cost_leq(a2.cost, cfg.ratio_a2() * opt)) << seed;
    ASSERT_EQ(bundle.graphs.size(), 6u);
    double best = kInf, best3 = kInf;
    for (int i = 0; i < 6; ++i) {
      best = std::min(best, bundle.graphs[i].cost);
      if (i < 3) best3 = std::min(best3, bundle.graphs[i].cost);
    }
    EXPECT_TRUE(costs_equal(a2.cost, best));
    EXPECT_TRUE(cost_leq(best3, a1.cost));
  }
}

TEST(Approx, RejectsK) {
  Instance inst = generate_random(5, 2, 0.5, 1);
  EXPECT_THROW(approx_a2(inst), InputError);
}
