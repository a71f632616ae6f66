#include <gtest/gtest.h>

#include <sstream>

#include "mcsg/core.hpp"

using namespace mcsg;

namespace {

Instance line(std::vector<std::pair<double, ColorSet>> pts, int k) {
  Instance inst;
  inst.k = k;
  for (auto& [x, c] : pts) inst.points.push_back({x, 0.0, c});
  return inst;
}

const ColorSet R = ColorSet::of({1});
const ColorSet B = ColorSet::of({2});
const ColorSet Y = ColorSet::of({3});

}  // namespace

TEST(LoadInstance, SinglePoint) {
  std::istringstream in(R"({"k":2,"points":[{"x":0,"y":0,"colors":[1,2]}]})");
  Instance inst = load_instance(in);
  EXPECT_EQ(inst.k, 2);
  ASSERT_EQ(inst.n(), 1);
  EXPECT_EQ(inst.points[0].colors, ColorSet::of({1, 2}));
}

TEST(LoadInstance, ColorOutOfRange) {
  std::istringstream in(R"({"k":2,"points":[{"x":0,"y":0,"colors":[3]}]})");
  try {
    load_instance(in);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("color out of range"), std::string::npos);
  }
}

TEST(LoadInstance, Rejects) {
  for (const char* doc : {R"({"k":0,"points":[{"x":0,"y":0,"colors":[1]}]})",
                          R"({"k":1,"points":[{"x":0,"y":0,"colors":[]}]})",
                          R"({"k":1,"points":[]})", R"({"k":1,"points":[{"x":0,"y":0,"colors":[1]},{"x":0,"y":0,"colors":[1]}]})",
                          "not json"}) {
    std::istringstream in(doc);
    EXPECT_THROW(load_instance(in), InputError) << doc;
  }
}

TEST(LoadInstance, RoundTripRandom) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Instance a = generate_random(1 + static_cast<int>(seed % 9), 1 + static_cast<int>(seed % 4), seed % 4 ? 0.5 : 0.0, seed);
    std::stringstream ss;
    save_instance(ss, a);
    Instance b = load_instance(ss);
    ASSERT_EQ(a.k, b.k);
    ASSERT_EQ(a.n(), b.n());
    for (int i = 0; i < a.n(); ++i) {
      EXPECT_EQ(a.points[i].x, b.points[i].x);
      EXPECT_EQ(a.points[i].y, b.points[i].y);
      EXPECT_EQ(a.points[i].colors, b.points[i].colors);
    }
  }
}

TEST(EdgeColor, Intersections) {
  Instance inst;
  inst.k = 3;
  inst.points = {{0, 0, ColorSet::of({1, 2})}, {1, 0, ColorSet::of({2, 3})}, {2, 0, R}, {3, 0, Y},
                 {4, 0, ColorSet::all(3)}, {5, 0, ColorSet::all(3)}};
  EXPECT_EQ(edge_color(inst, Edge(0, 1)), B);
  EXPECT_TRUE(edge_color(inst, Edge(2, 3)).empty());
  EXPECT_EQ(edge_color(inst, Edge(4, 5)), ColorSet::all(3));
}

TEST(IsCsg, Examples) {
  Instance one;
  one.k = 1;
  one.points = {{0, 0, R}};
  EXPECT_TRUE(is_csg(one, {}));
  Instance rbr = line({{0, R}, {1, B}, {2, R}}, 2);
  EXPECT_TRUE(is_csg(rbr, {Edge(0, 2)}));
  EXPECT_FALSE(is_csg(rbr, {Edge(0, 1), Edge(1, 2)}));
}

TEST(IsCsg, CompleteGraphFeasibleAndMonotone) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Instance inst = generate_random(6, 3, 0.5, seed);
    EdgeSet all;
    for (int a = 0; a < inst.n(); ++a)
      for (int b = a + 1; b < inst.n(); ++b)
        if (!edge_color(inst, Edge(a, b)).empty()) all.emplace_back(a, b);
    EXPECT_TRUE(is_csg(inst, all));
    EdgeSet some(all.begin(), all.begin() + all.size() / 2);
    if (is_csg(inst, some)) {
      EdgeSet more = some;
      more.push_back(all.back());
      EXPECT_TRUE(is_csg(inst, more));
    }
  }
}

TEST(SolutionCost, Examples) {
  Instance inst;
  inst.k = 1;
  inst.points = {{0, 0, R}, {3, 4, R}, {1, 0, R}, {2, 0, R}};
  EXPECT_EQ(solution_cost(inst, {}), 0.0);
  EXPECT_DOUBLE_EQ(solution_cost(inst, {Edge(0, 1)}), 5.0);
  EXPECT_DOUBLE_EQ(solution_cost(inst, {Edge(0, 2), Edge(2, 3)}), 2.0);
  EXPECT_DOUBLE_EQ(solution_cost(inst, {Edge(2, 3), Edge(0, 2)}), 2.0);
}

TEST(CheckSolution, DetectsProblems) {
  Instance inst = line({{0, R}, {1, R}}, 1);
  Solution ok = make_solution(inst, "t", {Edge(0, 1)});
  EXPECT_NO_THROW(check_solution(inst, ok));
  Solution bad_cost = ok;
  bad_cost.cost = 2.0;
  EXPECT_THROW(check_solution(inst, bad_cost), InvariantViolation);
  Solution empty = make_solution(inst, "t", {});
  EXPECT_THROW(check_solution(inst, empty), InvariantViolation);
}

TEST(GenerateRandom, Examples) {
  Instance a = generate_random(5, 3, 0.0, 1);
  for (const Point& p : a.points) EXPECT_EQ(p.colors.size(), 1);
  Instance b = generate_random(7, 2, 1.0, 2);
  for (const Point& p : b.points) EXPECT_EQ(p.colors, ColorSet::of({1, 2}));
  EXPECT_EQ(instance_to_json(generate_random(9, 3, 0.3, 5)), instance_to_json(generate_random(9, 3, 0.3, 5)));
  EXPECT_THROW(generate_random(3, 3, 1.5, 1), InputError);
  EXPECT_THROW(generate_random(0, 3, 0.5, 1), InputError);
}

TEST(GenerateRandom, CoversColors) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Instance inst = generate_random(6, 4, 0.3, seed);
    for (int c = 1; c <= 4; ++c) EXPECT_FALSE(inst.color_class(c).empty());
  }
}

TEST(CollinearOrder, DetectsLines) {
  Instance inst;
  inst.k = 1;
  inst.points = {{2, 2, R}, {0, 0, R}, {1, 1, R}};
  EXPECT_EQ(collinear_order(inst), (std::vector<int>{1, 2, 0}));
  inst.points.push_back({1, 0, R});
  EXPECT_TRUE(collinear_order(inst).empty());
}
