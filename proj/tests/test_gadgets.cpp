#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "mcsg/core.hpp"
#include "mcsg/gadgets.hpp"

using namespace mcsg;

namespace {
MonotoneCnf cnf_of(const std::string& text) {
  std::istringstream in(text);
  return parse_cnf(in);
}

const GadgetInstance& small_gadget() {
  static const GadgetInstance g = build_gadget(cnf_of("p mcnf 2 1\n+ 1 2\n"));
  return g;
}
}  // namespace

TEST(Cnf, ParseAndFormat) {
  MonotoneCnf cnf = cnf_of("c comment\np mcnf 3 2\n+ 3 1\n- 1 2\n");
  ASSERT_EQ(cnf.clauses.size(), 2u);
  EXPECT_EQ(cnf.clauses[0].vars, (std::vector<int>{1, 3}));
  EXPECT_FALSE(cnf.clauses[1].positive);
  EXPECT_EQ(format_cnf(cnf), "p mcnf 3 2\n+ 1 3\n- 1 2\n");
  EXPECT_EQ(format_cnf(cnf_of(format_cnf(cnf))), format_cnf(cnf));
}

TEST(Cnf, Rejects) {
  for (const char* text : {"+ 1 2\n", "p mcnf 2 1\n+ 1\n", "p mcnf 2 1\n+ 1 3\n", "p mcnf 2 2\n+ 1 2\n",
                           "p mcnf 4 2\n+ 1 3\n+ 2 4\n", "p mcnf 2 1\n* 1 2\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(parse_cnf(in), InputError) << text;
  }
  // nested and opposite-side clauses are fine
  EXPECT_NO_THROW(cnf_of("p mcnf 4 3\n+ 1 4\n+ 2 3\n- 1 3\n"));
}

TEST(Cnf, Assignments) {
  MonotoneCnf cnf = cnf_of("p mcnf 2 2\n+ 1 2\n- 1 2\n");
  std::istringstream a("1 -2");
  std::vector<bool> v = parse_assignment(a, 2);
  EXPECT_EQ(v, (std::vector<bool>{true, false}));
  EXPECT_TRUE(satisfies(cnf, v));
  EXPECT_FALSE(satisfies(cnf, {true, true}));
  std::istringstream missing("1");
  EXPECT_THROW(parse_assignment(missing, 2), InputError);
}

TEST(GadgetPlan, Scales) {
  GadgetLayout L = plan_gadget(cnf_of("p mcnf 2 1\n+ 1 2\n"));
  EXPECT_EQ(L.r, 2);
  EXPECT_DOUBLE_EQ(L.epsilon, 1.0 / 2000.0);
  EXPECT_DOUBLE_EQ(L.delta, 1.0 / 20.0);
  EXPECT_EQ(L.ribs.size(), 4u);
  EXPECT_EQ(L.active_points, 13 * L.r);
}

TEST(GadgetPlan, ActiveCount) {
  for (const char* text : {"p mcnf 2 1\n- 1 2\n", "p mcnf 3 1\n+ 1 2 3\n", "p mcnf 4 3\n+ 1 4\n+ 2 3\n- 1 3\n"}) {
    GadgetLayout L = plan_gadget(cnf_of(text));
    EXPECT_EQ(L.active_points, 13 * L.r) << text;
  }
}

TEST(GadgetPlan, EightLiteralExample) {
  GadgetLayout L = plan_gadget(cnf_of("p mcnf 5 3\n+ 1 3 5\n- 1 5\n- 2 3 4\n"));
  EXPECT_EQ(L.r, 8);
  EXPECT_EQ(L.active_points, 104);
  EXPECT_DOUBLE_EQ(L.epsilon, 1.0 / 32000.0);
  EXPECT_DOUBLE_EQ(L.delta, 1.0 / 80.0);
  EXPECT_GT(L.estimated_points, GadgetOptions{}.max_points);
  EXPECT_THROW(build_gadget(cnf_of("p mcnf 5 3\n+ 1 3 5\n- 1 5\n- 2 3 4\n")), Refusal);
}

TEST(GadgetW, SymbolicIdentity) {
  const double s2 = std::sqrt(2.0);
  for (int r : {2, 3, 8})
    for (int m : {1, 3}) {
      double eps = 1.0 / (500.0 * r * r), delta = 1.0 / (10.0 * r), ep = 1.25;
      double expect = ep + 39 * r * eps + r * (2 + 2 * s2) + r * delta * (2 + 2 * s2) + m * delta * (2 * s2 - 2);
      EXPECT_TRUE(costs_equal(w_formula(ep, r, m, eps, delta), expect));
    }
  EXPECT_DOUBLE_EQ(39 * 2 * (1.0 / 2000.0), 78.0 / 2000.0);
}

TEST(GadgetBuild, SmallInstance) {
  const GadgetInstance& g = small_gadget();
  EXPECT_EQ(g.r, 2);
  EXPECT_EQ(static_cast<int>(g.active_points.size()), 26);
  EXPECT_TRUE(costs_equal(compute_w(g), g.W));
  EXPECT_TRUE(costs_equal(g.W, w_formula(g.forced_cost, g.r, g.m_clauses, g.epsilon, g.delta)));
  for (const Edge& e : g.links) EXPECT_LE(edge_length(g.instance, e), g.epsilon * (1 + 1e-9));
}

TEST(GadgetBuild, Witness) {
  const GadgetInstance& g = small_gadget();
  for (std::vector<bool> a : {std::vector<bool>{true, false}, {false, true}, {true, true}}) {
    Solution w = build_witness(g, a);
    EXPECT_TRUE(is_csg(g.instance, w.edges));
    WitnessBreakdown br = witness_breakdown(g, w);
    EXPECT_TRUE(costs_equal(br.forced_cost, g.forced_cost));
    EXPECT_TRUE(costs_equal(br.switch_cost, br.expected_switch_cost));
  }
  EXPECT_THROW(build_witness(g, {false, false}), InputError);
}
