#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mcsg/types.hpp"

namespace mcsg {

// The operations below take an instance whose points are already in order
// along their line (p_1 = points[0]); dp_solve sorts internally.

// Edges crossing cut i (between p_i and p_{i+1}, 1-based), one per color set.
struct CutEdgeSet {
  int i = 0;
  std::vector<ColorSet> gamma;  // ascending
  EdgeSet edges;                // parallel to gamma
};

// Per color c (index c-1), a restricted growth string over the cut edges
// that carry c, in gamma order.
using PartitionVector = std::vector<std::vector<int>>;

// Splits edges at intermediate points carrying the edge color until the
// star property holds. Repeated edges are kept, so the cost is unchanged.
EdgeSet normalize_star(const Instance& inst, const EdgeSet& edges);

// Unique edge per color set; nullopt if some color set has no endpoint on
// one side or the endpoints share more colors than the set.
std::optional<CutEdgeSet> cut_edges(const Instance& inst, int i, std::vector<ColorSet> gamma);
bool is_valid_cut(const Instance& inst, const CutEdgeSet& cut);
// prev is cut i-1, next is cut i.
bool compatible(const Instance& inst, const CutEdgeSet& prev, const CutEdgeSet& next);
PartitionVector hat_pi(const Instance& inst, const CutEdgeSet& prev, const CutEdgeSet& next,
                       const PartitionVector& pi_next);

// Bell number B(t).
std::uint64_t bell_number(int t);

struct DpOptions {
  int k_guard = 6;
  std::uint64_t max_partition_vectors = 2'000'000;  // per color family
  int max_family_size = 16;                         // feasible color sets per cut
};

struct CutStats {
  int cut = 0;
  int gamma_states = 0;
  std::uint64_t finite_entries = 0;
  std::uint64_t max_partition_vectors = 0;  // over the color families of this cut
  int max_ground = 0;                       // largest per-color edge count
};

struct DpStats {
  std::vector<CutStats> cuts;
  std::uint64_t total_entries = 0;
};

Solution dp_solve(const Instance& inst, const DpOptions& opts = {}, DpStats* stats = nullptr);

}  // namespace mcsg
