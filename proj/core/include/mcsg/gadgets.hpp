#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "mcsg/types.hpp"

namespace mcsg {

struct MonotoneClause {
  bool positive = true;
  std::vector<int> vars;  // 1-based, ascending
};

// Variables lie on a line in index order; positive clauses are embedded
// above it, negative ones below.
struct MonotoneCnf {
  int num_vars = 0;
  std::vector<MonotoneClause> clauses;
};

// Header "p mcnf <vars> <clauses>", then one clause per line: "+ 1 3 5" or
// "- 2 4". Lines starting with 'c' are comments.
MonotoneCnf parse_cnf(std::istream& in);
MonotoneCnf load_cnf_file(const std::string& path);
std::string format_cnf(const MonotoneCnf& cnf);

// Throws InputError on bad degrees, repeated or out-of-range variables, and
// crossing clauses on one side.
void validate_cnf(const MonotoneCnf& cnf);
// assignment[v - 1] is the value of variable v.
bool satisfies(const MonotoneCnf& cnf, const std::vector<bool>& assignment);
// Whitespace separated signed literals, one per variable ("1 -2 3").
std::vector<bool> parse_assignment(std::istream& in, int num_vars);

// Lattice point in tenths of an epsilon unit.
struct GridPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

struct Switch {
  GridPoint tip;    // black rib end
  GridPoint cage;   // black, on the yellow cage
  GridPoint relay;  // purple, on the red/blue world
};

struct RibLayout {
  int section = 0;
  int var = 0;
  int clause = 0;
  bool small = false;     // 2-delta rib
  std::int64_t x = 0;     // epsilon units
  std::int64_t size = 0;  // switch scale in epsilon units
  Switch upper;
  Switch lower;
  bool has_clause_point = false;
  bool clause_upper = true;
  GridPoint clause_point;
};

// Layout without the chains. All distances in epsilon units.
struct GadgetLayout {
  int r = 0;
  int m = 0;
  int num_vars = 0;
  double epsilon = 0;  // in switch units
  double delta = 0;
  std::int64_t unit = 0;        // one switch unit in epsilon units
  std::int64_t delta_units = 0;
  std::int64_t half_rib = 0;
  std::int64_t pitch = 0;
  std::vector<RibLayout> ribs;
  std::vector<int> clause_level;
  int active_points = 0;
  std::uint64_t estimated_points = 0;
};

GadgetLayout plan_gadget(const MonotoneCnf& cnf);

struct GadgetOptions {
  std::uint64_t max_points = 20'000'000;
};

struct RibPoints {
  int tip[2] = {-1, -1};  // upper, lower
  int cage[2] = {-1, -1};
  int relay[2] = {-1, -1};
  int clause = -1;
};

struct GadgetInstance {
  MonotoneCnf cnf;
  GadgetLayout layout;
  Instance instance;
  int r = 0;
  int m_clauses = 0;
  double epsilon = 0;
  double delta = 0;
  std::vector<int> active_points;
  std::vector<RibPoints> rib_points;  // parallel to layout.ribs
  EdgeSet links;                      // same-color pairs within epsilon
  EdgeSet forced;                     // E'
  double forced_cost = 0;
  double W = 0;
};

GadgetInstance build_gadget(const MonotoneCnf& cnf, const GadgetOptions& opts = {});

double w_formula(double forced_cost, int r, int m, double epsilon, double delta);
// Recomputes E' from the emitted points and evaluates W.
double compute_w(const GadgetInstance& g);

// Links plus switch edges set by the assignment. Throws InputError when the
// assignment does not satisfy the formula.
Solution build_witness(const GadgetInstance& g, const std::vector<bool>& assignment);

struct WitnessBreakdown {
  double forced_cost = 0;
  int epsilon_edges = 0;  // short edges outside E'
  double epsilon_cost = 0;
  double switch_cost = 0;  // edges longer than 1.5 epsilon
  double expected_switch_cost = 0;
};
WitnessBreakdown witness_breakdown(const GadgetInstance& g, const Solution& witness);

}  // namespace mcsg
