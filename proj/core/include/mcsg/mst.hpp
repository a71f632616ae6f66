#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "mcsg/types.hpp"

namespace mcsg {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct XY {
  double x = 0;
  double y = 0;
};

// MST of the complete Euclidean graph on pts; indices refer to pts.
// Ties are broken by (length, a, b).
EdgeSet euclidean_mst(const std::vector<XY>& pts);
// MST of a subset of the instance (indices ascending), global indices.
EdgeSet euclidean_mst(const Instance& inst, const std::vector<int>& subset);

// Per-color forced forest E'_c.
struct ColorForest {
  int color = 0;
  EdgeSet edges;
  std::vector<int> points;     // S_c, ascending
  std::vector<int> component;  // component id per entry of points
  int num_components = 0;
};

ColorForest forced_edges(const Instance& inst, int c);
// Same forest computed from the MST edges shorter than radius. Returns
// false when some short-edge component has no multichromatic point, in
// which case the result would not be exact.
bool forced_edges_local(const Instance& inst, int c, double radius, ColorForest& out);

struct ColorContraction {
  int color = 0;
  std::vector<int> comp_of;  // per instance point, -1 outside S_c
  int num_components = 0;
  // Shortest admissible point pair between components i and j (i != j),
  // flattened num_components x num_components. Invalid edge when none.
  std::vector<Edge> best_edge;
  std::vector<double> best_weight;

  double weight(int i, int j) const { return best_weight[static_cast<size_t>(i) * num_components + j]; }
  Edge edge(int i, int j) const { return best_edge[static_cast<size_t>(i) * num_components + j]; }
};

// Every pair of S_c points is admissible.
std::vector<ColorContraction> contract_components(const Instance& inst, const std::vector<ColorForest>& forests);

// Prim over a complete graph of `nodes` super-nodes with weights w(i,j).
// Returns the chosen (i,j) pairs; ties by (w, min, max).
template <class W>
std::vector<std::pair<int, int>> dense_mst(int nodes, W&& w) {
  std::vector<std::pair<int, int>> out;
  if (nodes <= 1) return out;
  std::vector<double> key(nodes, kInf);
  std::vector<int> from(nodes, -1);
  std::vector<char> in(nodes, 0);
  auto better = [](double w1, int a1, int b1, double w2, int a2, int b2) {
    if (w1 != w2) return w1 < w2;
    int lo1 = std::min(a1, b1), hi1 = std::max(a1, b1), lo2 = std::min(a2, b2), hi2 = std::max(a2, b2);
    if (lo1 != lo2) return lo1 < lo2;
    return hi1 < hi2;
  };
  int cur = 0;
  in[0] = 1;
  for (int step = 1; step < nodes; ++step) {
    for (int v = 0; v < nodes; ++v) {
      if (in[v]) continue;
      double wv = w(cur, v);
      if (from[v] < 0 || better(wv, cur, v, key[v], from[v], v)) {
        key[v] = wv;
        from[v] = cur;
      }
    }
    int nxt = -1;
    for (int v = 0; v < nodes; ++v) {
      if (in[v]) continue;
      if (nxt < 0 || better(key[v], from[v], v, key[nxt], from[nxt], nxt)) nxt = v;
    }
    in[nxt] = 1;
    out.emplace_back(from[nxt], nxt);
    cur = nxt;
  }
  return out;
}

// Minimum edge set connecting `points` given that each block of `blocks`
// is already connected. Blocks may be empty or partial; points not in any
// block are singletons. Inter-block weight is the minimum point distance.
EdgeSet mst_completion(const Instance& inst, const std::vector<int>& points,
                       const std::vector<std::vector<int>>& blocks);

}  // namespace mcsg
