#include "mcsg/exact2.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "mcsg/core.hpp"
#include "mcsg/dsu.hpp"
#include "mcsg/mst.hpp"

namespace mcsg {

namespace {

// Contracted view of one color world.
struct World {
  int nodes = 0;
  std::vector<int> node_of;  // per local point, -1 if not in this color
  std::vector<double> w;     // nodes x nodes minimum distance
  std::vector<Edge> realize; // local point pair achieving w
  EdgeSet fixed;             // forced edges (local indices)
};

class PairContext {
 public:
  PairContext(const PairProjection& proj) {
    const Instance& base = *proj.base;
    if (proj.c1 == proj.c2 || proj.c1 < 1 || proj.c2 < 1 || proj.c1 > base.k || proj.c2 > base.k)
      throw InputError("invalid color pair");
    local_.assign(base.n(), -1);
    sub_.k = 2;
    for (int i = 0; i < base.n(); ++i) {
      ColorSet cs = base.points[i].colors;
      ColorSet pc;
      if (cs.contains(proj.c1)) pc.add(1);
      if (cs.contains(proj.c2)) pc.add(2);
      if (pc.empty()) continue;
      local_[i] = static_cast<int>(global_.size());
      global_.push_back(i);
      sub_.points.push_back({base.points[i].x, base.points[i].y, pc});
    }
    for (int i = 0; i < sub_.n(); ++i)
      if (sub_.points[i].colors.size() == 2) purple_.push_back(i);

    std::vector<int> group(sub_.n(), -1);
    int gid = 0;
    for (const auto& blk : proj.group_merge) {
      bool used = false;
      for (int g : blk) {
        if (g < 0 || g >= base.n()) throw InputError("group_merge index out of range");
        int l = local_[g];
        if (l < 0) continue;
        if (group[l] >= 0) throw InputError("group_merge blocks overlap");
        group[l] = gid;
        used = true;
      }
      if (used) ++gid;
    }
    has_groups_ = gid > 0;

    for (int col = 1; col <= 2; ++col) build_world(col, group, worlds_[col - 1]);

    purple_index_.assign(sub_.n(), -1);
    for (size_t i = 0; i < purple_.size(); ++i) purple_index_[purple_[i]] = static_cast<int>(i);
    base_dsu_.reset(static_cast<int>(purple_.size()), false);
    for (size_t i = 0; i < purple_.size(); ++i)
      for (size_t j = i + 1; j < purple_.size(); ++j)
        if (group[purple_[i]] >= 0 && group[purple_[i]] == group[purple_[j]]) base_dsu_.unite(static_cast<int>(i), static_cast<int>(j));
  }

  int m() const { return static_cast<int>(purple_.size()); }

  // Per-color completion; the purple DSU (over purple indices) carries A.
  double completion(int col, Dsu& purple_dsu, std::vector<std::pair<int, int>>* chosen = nullptr) const {
    const World& wd = worlds_[col - 1];
    if (wd.nodes <= 1) return 0.0;
    Dsu nd(wd.nodes);
    for (size_t i = 0; i < purple_.size(); ++i) {
      int root = purple_dsu.find(static_cast<int>(i));
      if (root != static_cast<int>(i)) nd.unite(wd.node_of[purple_[i]], wd.node_of[purple_[root]]);
    }
    std::vector<int> super(wd.nodes, -1);
    int q = 0;
    for (int v = 0; v < wd.nodes; ++v) {
      int r = nd.find(v);
      if (super[r] < 0) super[r] = q++;
      super[v] = super[r];
    }
    std::vector<double> sw(static_cast<size_t>(q) * q, kInf);
    std::vector<std::pair<int, int>> sr(static_cast<size_t>(q) * q, {-1, -1});
    for (int a = 0; a < wd.nodes; ++a) {
      for (int b = a + 1; b < wd.nodes; ++b) {
        int sa = super[a], sb = super[b];
        if (sa == sb) continue;
        double x = wd.w[static_cast<size_t>(a) * wd.nodes + b];
        size_t k1 = static_cast<size_t>(sa) * q + sb, k2 = static_cast<size_t>(sb) * q + sa;
        if (x < sw[k1]) {
          sw[k1] = sw[k2] = x;
          sr[k1] = sr[k2] = {a, b};
        }
      }
    }
    double total = 0;
    for (auto [i, j] : dense_mst(q, [&](int a, int b) { return sw[static_cast<size_t>(a) * q + b]; })) {
      size_t key = static_cast<size_t>(i) * q + j;
      total += sw[key];
      if (chosen) chosen->push_back(sr[key]);
    }
    return total;
  }

  Solution solve(int m_limit) {
    if (m() > m_limit)
      throw Refusal("exact2: " + std::to_string(m()) + " bichromatic points exceed m_limit " + std::to_string(m_limit));
    std::vector<std::tuple<double, int, int>> cand;
    for (int i = 0; i < m(); ++i)
      for (int j = i + 1; j < m(); ++j)
        cand.emplace_back(dist(sub_.points[purple_[i]], sub_.points[purple_[j]]), i, j);
    std::sort(cand.begin(), cand.end());

    Dsu dsu = base_dsu_;
    std::vector<int> cur, best_set;
    double best = kInf;
    double wa = 0;
    auto evaluate = [&]() {
      double c1 = completion(1, dsu);
      if (wa + c1 >= best) return;
      double total = wa + c1 + completion(2, dsu);
      if (total < best) {
        best = total;
        best_set = cur;
      }
    };
    auto dfs = [&](auto&& self, size_t start) -> void {
      evaluate();
      for (size_t j = start; j < cand.size(); ++j) {
        auto& [w, a, b] = cand[j];
        if (wa + w >= best) break;
        if (dsu.same(a, b)) continue;
        int mark = dsu.checkpoint();
        dsu.unite(a, b);
        cur.push_back(static_cast<int>(j));
        wa += w;
        self(self, j + 1);
        wa -= w;
        cur.pop_back();
        dsu.rollback(mark);
      }
    };
    dfs(dfs, 0);

    Dsu fin = base_dsu_;
    EdgeSet edges;
    for (int j : best_set) {
      auto& [w, a, b] = cand[j];
      fin.unite(a, b);
      edges.emplace_back(global_[purple_[a]], global_[purple_[b]]);
    }
    for (int col = 1; col <= 2; ++col) {
      const World& wd = worlds_[col - 1];
      for (const Edge& e : wd.fixed) edges.emplace_back(global_[e.a], global_[e.b]);
      std::vector<std::pair<int, int>> chosen;
      completion(col, fin, &chosen);
      for (auto [na, nb] : chosen) {
        const Edge& e = wd.realize[static_cast<size_t>(na) * wd.nodes + nb];
        edges.emplace_back(global_[e.a], global_[e.b]);
      }
    }
    return make_solution(base(), "exact2", std::move(edges), 1.0);
  }

  double cost_of(const EdgeSet& forest) {
    Dsu dsu = base_dsu_;
    double wa = 0;
    for (const Edge& e : forest) {
      int a = local_[e.a], b = local_[e.b];
      if (a < 0 || b < 0 || purple_index_[a] < 0 || purple_index_[b] < 0)
        throw InputError("forest edge is not between bichromatic points");
      if (!dsu.unite(purple_index_[a], purple_index_[b])) throw InputError("forest has a cycle");
      wa += dist(sub_.points[a], sub_.points[b]);
    }
    double fixed = 0;
    for (const World& wd : worlds_)
      for (const Edge& e : wd.fixed) fixed += dist(sub_.points[e.a], sub_.points[e.b]);
    return wa + fixed + completion(1, dsu) + completion(2, dsu);
  }

  void set_base(const Instance* b) { base_ = b; }
  const Instance& base() const { return *base_; }

 private:
  void build_world(int col, const std::vector<int>& group, World& wd) {
    const int n = sub_.n();
    wd.node_of.assign(n, -1);
    if (!has_groups_) {
      ColorForest f = forced_edges(sub_, col);
      for (size_t i = 0; i < f.points.size(); ++i) wd.node_of[f.points[i]] = f.component[i];
      wd.nodes = f.num_components;
      wd.fixed = f.edges;
    } else {
      std::vector<int> gnode;
      for (int i = 0; i < n; ++i) {
        if (!sub_.points[i].colors.contains(col)) continue;
        int g = group[i];
        if (g >= 0) {
          if (static_cast<int>(gnode.size()) <= g) gnode.resize(g + 1, -1);
          if (gnode[g] < 0) gnode[g] = wd.nodes++;
          wd.node_of[i] = gnode[g];
        } else {
          wd.node_of[i] = wd.nodes++;
        }
      }
    }
    const int q = wd.nodes;
    wd.w.assign(static_cast<size_t>(q) * q, kInf);
    wd.realize.assign(static_cast<size_t>(q) * q, Edge{});
    for (int a = 0; a < n; ++a) {
      if (wd.node_of[a] < 0) continue;
      for (int b = a + 1; b < n; ++b) {
        if (wd.node_of[b] < 0 || wd.node_of[a] == wd.node_of[b]) continue;
        double x = dist(sub_.points[a], sub_.points[b]);
        size_t k1 = static_cast<size_t>(wd.node_of[a]) * q + wd.node_of[b];
        size_t k2 = static_cast<size_t>(wd.node_of[b]) * q + wd.node_of[a];
        if (x < wd.w[k1]) {
          wd.w[k1] = wd.w[k2] = x;
          wd.realize[k1] = wd.realize[k2] = Edge(a, b);
        }
      }
    }
  }

  const Instance* base_ = nullptr;
  Instance sub_;
  std::vector<int> local_, global_, purple_, purple_index_;
  bool has_groups_ = false;
  World worlds_[2];
  Dsu base_dsu_;
};

}  // namespace

Solution solve_pair(const PairProjection& proj, int m_limit) {
  if (!proj.base) throw InputError("projection without instance");
  PairContext ctx(proj);
  ctx.set_base(proj.base);
  return ctx.solve(m_limit);
}

Solution solve_exact2(const Instance& inst, int m_limit) {
  if (inst.k > 2) throw InputError("exact2 needs k <= 2 or an explicit pair");
  if (inst.k == 1) return make_solution(inst, "exact2", euclidean_mst(inst, inst.color_class(1)), 1.0);
  return solve_pair(PairProjection{&inst, 1, 2, {}}, m_limit);
}

double completion_cost(const PairProjection& proj, const EdgeSet& purple_forest) {
  if (!proj.base) throw InputError("projection without instance");
  PairContext ctx(proj);
  ctx.set_base(proj.base);
  return ctx.cost_of(purple_forest);
}

void enumerate_forests(int m, const std::function<void(const EdgeSet&)>& visit) {
  EdgeSet all;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) all.emplace_back(i, j);
  Dsu dsu(m, false);
  EdgeSet cur;
  auto dfs = [&](auto&& self, size_t start) -> void {
    visit(cur);
    for (size_t j = start; j < all.size(); ++j) {
      if (dsu.same(all[j].a, all[j].b)) continue;
      int mark = dsu.checkpoint();
      dsu.unite(all[j].a, all[j].b);
      cur.push_back(all[j]);
      self(self, j + 1);
      cur.pop_back();
      dsu.rollback(mark);
    }
  };
  dfs(dfs, 0);
}

std::uint64_t count_forests(int m) {
  std::uint64_t n = 0;
  enumerate_forests(m, [&](const EdgeSet&) { ++n; });
  return n;
}

}  // namespace mcsg
