#include "mcsg/mst.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <tuple>

#include "mcsg/core.hpp"
#include "mcsg/dsu.hpp"

namespace mcsg {

EdgeSet euclidean_mst(const std::vector<XY>& pts) {
  auto w = [&](int i, int j) { return std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y); };
  EdgeSet out;
  for (auto [a, b] : dense_mst(static_cast<int>(pts.size()), w)) out.emplace_back(a, b);
  std::sort(out.begin(), out.end());
  return out;
}

EdgeSet euclidean_mst(const Instance& inst, const std::vector<int>& subset) {
  std::vector<XY> pts;
  pts.reserve(subset.size());
  for (int i : subset) pts.push_back({inst.points[i].x, inst.points[i].y});
  EdgeSet out;
  for (const Edge& e : euclidean_mst(pts)) out.emplace_back(subset[e.a], subset[e.b]);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Ascending (w, a, b) rebuild that never joins two components that both
// hold a multichromatic point.
void prune_into(const Instance& inst, int c, std::vector<int> points, EdgeSet tree, ColorForest& out) {
  std::vector<std::tuple<double, int, int>> sorted;
  sorted.reserve(tree.size());
  for (const Edge& e : tree) sorted.emplace_back(edge_length(inst, e), e.a, e.b);
  std::sort(sorted.begin(), sorted.end());

  const int m = static_cast<int>(points.size());
  auto local = [&](int g) { return static_cast<int>(std::lower_bound(points.begin(), points.end(), g) - points.begin()); };
  Dsu dsu(m);
  std::vector<char> multi(m, 0);
  for (int i = 0; i < m; ++i) multi[i] = inst.points[points[i]].multichromatic();

  out.color = c;
  out.edges.clear();
  for (auto& [w, a, b] : sorted) {
    int ra = dsu.find(local(a)), rb = dsu.find(local(b));
    if (ra == rb) continue;
    if (multi[ra] && multi[rb]) continue;
    char mm = multi[ra] | multi[rb];
    dsu.unite(ra, rb);
    multi[dsu.find(ra)] = mm;
    out.edges.emplace_back(a, b);
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.component.assign(m, -1);
  std::vector<int> id(m, -1);
  int next = 0;
  for (int i = 0; i < m; ++i) {
    int r = dsu.find(i);
    if (id[r] < 0) id[r] = next++;
    out.component[i] = id[r];
  }
  out.num_components = next;
  out.points = std::move(points);
}

}  // namespace

ColorForest forced_edges(const Instance& inst, int c) {
  ColorForest out;
  std::vector<int> pts = inst.color_class(c);
  EdgeSet tree = euclidean_mst(inst, pts);
  prune_into(inst, c, std::move(pts), std::move(tree), out);
  return out;
}

bool forced_edges_local(const Instance& inst, int c, double radius, ColorForest& out) {
  std::vector<int> pts = inst.color_class(c);
  const int m = static_cast<int>(pts.size());
  auto cell = [&](double v) { return static_cast<std::int64_t>(std::floor(v / radius)); };
  auto key = [](std::int64_t cx, std::int64_t cy) { return (cx << 32) ^ (cy & 0xffffffffLL); };
  std::vector<std::pair<std::int64_t, int>> keyed(m);
  for (int i = 0; i < m; ++i) {
    const Point& p = inst.points[pts[i]];
    keyed[i] = {key(cell(p.x), cell(p.y)), i};
  }
  std::sort(keyed.begin(), keyed.end());

  std::vector<std::tuple<double, int, int>> cand;
  for (int i = 0; i < m; ++i) {
    const Point& p = inst.points[pts[i]];
    std::int64_t cx = cell(p.x), cy = cell(p.y);
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        std::int64_t kk = key(cx + dx, cy + dy);
        auto it = std::lower_bound(keyed.begin(), keyed.end(), std::make_pair(kk, -1));
        for (; it != keyed.end() && it->first == kk; ++it) {
          int j = it->second;
          if (j <= i) continue;
          double w = dist(p, inst.points[pts[j]]);
          if (w <= radius) cand.emplace_back(w, pts[i], pts[j]);
        }
      }
    }
  }
  std::sort(cand.begin(), cand.end());
  Dsu dsu(m);
  EdgeSet forest;
  auto local = [&](int g) { return static_cast<int>(std::lower_bound(pts.begin(), pts.end(), g) - pts.begin()); };
  for (auto& [w, a, b] : cand)
    if (dsu.unite(local(a), local(b))) forest.emplace_back(a, b);
  std::vector<char> has_multi(m, 0);
  bool any_multi = false;
  for (int i = 0; i < m; ++i)
    if (inst.points[pts[i]].multichromatic()) {
      has_multi[dsu.find(i)] = 1;
      any_multi = true;
    }
  if (!any_multi && dsu.sets() > 1) return false;
  for (int i = 0; i < m; ++i)
    if (!has_multi[dsu.find(i)] && any_multi) return false;
  prune_into(inst, c, std::move(pts), std::move(forest), out);
  return true;
}

std::vector<ColorContraction> contract_components(const Instance& inst, const std::vector<ColorForest>& forests) {
  std::vector<ColorContraction> out;
  for (const ColorForest& f : forests) {
    ColorContraction cc;
    cc.color = f.color;
    cc.comp_of.assign(inst.n(), -1);
    for (size_t i = 0; i < f.points.size(); ++i) cc.comp_of[f.points[i]] = f.component[i];
    const int q = f.num_components;
    cc.num_components = q;
    cc.best_edge.assign(static_cast<size_t>(q) * q, Edge{});
    cc.best_weight.assign(static_cast<size_t>(q) * q, kInf);
    for (size_t i = 0; i < f.points.size(); ++i) {
      for (size_t j = i + 1; j < f.points.size(); ++j) {
        int a = f.points[i], b = f.points[j];
        int ca = cc.comp_of[a], cb = cc.comp_of[b];
        if (ca == cb) continue;
        double w = dist(inst.points[a], inst.points[b]);
        size_t ij = static_cast<size_t>(ca) * q + cb, ji = static_cast<size_t>(cb) * q + ca;
        if (w < cc.best_weight[ij]) {
          cc.best_weight[ij] = cc.best_weight[ji] = w;
          cc.best_edge[ij] = cc.best_edge[ji] = Edge(a, b);
        }
      }
    }
    out.push_back(std::move(cc));
  }
  return out;
}

EdgeSet mst_completion(const Instance& inst, const std::vector<int>& points,
                       const std::vector<std::vector<int>>& blocks) {
  std::vector<int> node(inst.n(), -1);
  int nodes = 0;
  for (const auto& blk : blocks) {
    bool used = false;
    for (int p : blk) {
      if (std::find(points.begin(), points.end(), p) == points.end()) continue;
      node[p] = nodes;
      used = true;
    }
    if (used) ++nodes;
  }
  for (int p : points)
    if (node[p] < 0) node[p] = nodes++;
  std::vector<double> w(static_cast<size_t>(nodes) * nodes, kInf);
  std::vector<Edge> realize(static_cast<size_t>(nodes) * nodes);
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = i + 1; j < points.size(); ++j) {
      int a = points[i], b = points[j];
      int na = node[a], nb = node[b];
      if (na == nb) continue;
      double d = dist(inst.points[a], inst.points[b]);
      size_t ij = static_cast<size_t>(na) * nodes + nb, ji = static_cast<size_t>(nb) * nodes + na;
      if (d < w[ij] || (d == w[ij] && Edge(a, b) < realize[ij])) {
        w[ij] = w[ji] = d;
        realize[ij] = realize[ji] = Edge(a, b);
      }
    }
  }
  EdgeSet out;
  for (auto [i, j] : dense_mst(nodes, [&](int a, int b) { return w[static_cast<size_t>(a) * nodes + b]; }))
    out.push_back(realize[static_cast<size_t>(i) * nodes + j]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mcsg
