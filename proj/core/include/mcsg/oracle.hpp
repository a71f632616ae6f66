#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcsg/types.hpp"

namespace mcsg {

struct OracleBudget {
  int max_candidate_edges = 22;
  double time_limit = 120.0;  // seconds
};

struct OracleOptions {
  EdgeSet required;        // edges every candidate solution must contain
  bool star_only = false;  // collinear input: drop edges violating the star property
};

// Pairs with a nonempty shared color, sorted by (length, a, b).
EdgeSet candidate_edges(const Instance& inst, bool star_only = false);

// Exhaustive branch-and-bound over candidate-edge subsets.
Solution brute_force(const Instance& inst, const OracleBudget& budget = {}, const OracleOptions& opts = {});
// Plain enumeration of all 2^E subsets.
Solution brute_force_naive(const Instance& inst, const OracleOptions& opts = {}, int max_edges = 20);

struct BenchSpec {
  std::string family = "random";  // random | collinear | allblack
  int n_min = 4;
  int n_max = 6;
  int k = 3;
  double multichromatic_fraction = 0.5;
  std::uint64_t first_seed = 1;
};

struct BenchRow {
  std::uint64_t seed = 0;
  int n = 0;
  int k = 0;
  double opt = 0;
  std::string algo;
  double cost = 0;
  double ratio = 0;
};

struct BenchSummary {
  std::string algo;
  int count = 0;
  double max_ratio = 0;
  double mean_ratio = 0;
  double bound = 0;
  int violations = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<BenchSummary> summaries;
  std::vector<std::string> failures;
};

// Algorithms: a1, a2, exact2, dp, pairing.
BenchReport ratio_bench(const BenchSpec& spec, const std::vector<std::string>& algos, int seeds,
                        const OracleBudget& budget = {});
std::string bench_csv(const BenchReport& report);

}  // namespace mcsg
