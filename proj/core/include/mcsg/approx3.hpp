#pragma once

#include <string>
#include <vector>

#include "mcsg/exact2.hpp"
#include "mcsg/types.hpp"

namespace mcsg {

struct ApproxConfig {
  double steiner_ratio_bound = 1.21;
  int m_limit = kDefaultMLimit;

  // Throws InputError outside 1 <= rho <= 2.
  void validate() const;
  double ratio_a2() const { return 2.0 - 1.0 / (3.0 + 2.0 * steiner_ratio_bound); }
  // Analysis constant only.
  double beta() const { return 2.0 * steiner_ratio_bound / (3.0 + 2.0 * steiner_ratio_bound); }
};

struct CandidateBundle {
  std::vector<std::string> labels;
  std::vector<Solution> graphs;
  int chosen = -1;
};

Solution approx_a1(const Instance& inst, const ApproxConfig& cfg = {});

// Blocks of one or two colors partitioning 1..k.
Solution approx_pairing(const Instance& inst, const std::vector<std::vector<int>>& pairing,
                        const ApproxConfig& cfg = {});
// Consecutive pairs {1,2},{3,4},...
std::vector<std::vector<int>> default_pairing(int k);

Solution approx_a2(const Instance& inst, const ApproxConfig& cfg = {}, CandidateBundle* bundle = nullptr);

}  // namespace mcsg
