#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mcsg/types.hpp"

namespace mcsg {

inline constexpr int kDefaultMLimit = 9;

// Instance restricted to colors c1, c2 (points with neither are dropped).
// Points sharing a group_merge block count as already connected in both
// colors.
struct PairProjection {
  const Instance* base = nullptr;
  int c1 = 1;
  int c2 = 2;
  std::vector<std::vector<int>> group_merge;
};

// Minimum-cost CSG of the projected two-color instance. Throws Refusal
// when the number of bichromatic points exceeds m_limit.
Solution solve_pair(const PairProjection& proj, int m_limit = kDefaultMLimit);

// solve_pair on colors (1,2) for k = 2, or the MST for k = 1.
Solution solve_exact2(const Instance& inst, int m_limit = kDefaultMLimit);

// w(f) plus the per-color completion cost for a fixed purple forest f
// (global point indices, both endpoints bichromatic).
double completion_cost(const PairProjection& proj, const EdgeSet& purple_forest);

// Visits every acyclic edge subset of K_m once, the empty set first.
void enumerate_forests(int m, const std::function<void(const EdgeSet&)>& visit);
std::uint64_t count_forests(int m);

}  // namespace mcsg
