#include "mcsg/approx3.hpp"

#include <algorithm>

#include "mcsg/core.hpp"
#include "mcsg/mst.hpp"

namespace mcsg {

void ApproxConfig::validate() const {
  if (!(steiner_ratio_bound >= 1.0 && steiner_ratio_bound <= 2.0))
    throw InputError("steiner ratio bound must lie in [1,2]");
}

namespace {

void require_k3(const Instance& inst) {
  if (inst.k != 3) throw InputError("algorithm needs k = 3");
}

EdgeSet pair_edges(const Instance& inst, int a, int b, const std::vector<std::vector<int>>& groups, int m_limit) {
  return solve_pair(PairProjection{&inst, a, b, groups}, m_limit).edges;
}

EdgeSet join(EdgeSet a, const EdgeSet& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

Solution approx_a1(const Instance& inst, const ApproxConfig& cfg) {
  require_k3(inst);
  EdgeSet e = join(pair_edges(inst, 1, 2, {}, cfg.m_limit), euclidean_mst(inst, inst.color_class(3)));
  return make_solution(inst, "a1", std::move(e), 2.0);
}

std::vector<std::vector<int>> default_pairing(int k) {
  std::vector<std::vector<int>> out;
  for (int c = 1; c <= k; c += 2) {
    if (c + 1 <= k) out.push_back({c, c + 1});
    else out.push_back({c});
  }
  return out;
}

Solution approx_pairing(const Instance& inst, const std::vector<std::vector<int>>& pairing, const ApproxConfig& cfg) {
  std::vector<int> seen(inst.k + 1, 0);
  for (const auto& blk : pairing) {
    if (blk.empty() || blk.size() > 2) throw InputError("pairing blocks must have one or two colors");
    for (int c : blk) {
      if (c < 1 || c > inst.k) throw InputError("pairing color out of range");
      if (seen[c]++) throw InputError("pairing repeats a color");
    }
  }
  for (int c = 1; c <= inst.k; ++c)
    if (!seen[c]) throw InputError("pairing misses color " + std::to_string(c));
  EdgeSet e;
  for (const auto& blk : pairing) {
    if (blk.size() == 2) e = join(std::move(e), pair_edges(inst, blk[0], blk[1], {}, cfg.m_limit));
    else e = join(std::move(e), euclidean_mst(inst, inst.color_class(blk[0])));
  }
  double ratio = static_cast<double>((inst.k + 1) / 2);
  return make_solution(inst, "pairing", std::move(e), ratio);
}

Solution approx_a2(const Instance& inst, const ApproxConfig& cfg, CandidateBundle* bundle) {
  require_k3(inst);
  cfg.validate();
  struct Split {
    int a, b, mono;
  };
  const Split splits[3] = {{1, 2, 3}, {1, 3, 2}, {2, 3, 1}};
  const char* names[6] = {"G1", "G2", "G3", "G4", "G5", "G6"};

  std::vector<int> black;
  for (int i = 0; i < inst.n(); ++i)
    if (inst.points[i].colors.size() == 3) black.push_back(i);
  EdgeSet h = euclidean_mst(inst, black);
  std::vector<std::vector<int>> hblocks;
  if (!black.empty()) hblocks.push_back(black);

  CandidateBundle local;
  CandidateBundle& cb = bundle ? *bundle : local;
  cb = CandidateBundle{};
  for (const Split& s : splits) {
    EdgeSet e = join(pair_edges(inst, s.a, s.b, {}, cfg.m_limit), euclidean_mst(inst, inst.color_class(s.mono)));
    cb.graphs.push_back(make_solution(inst, "a2", std::move(e), cfg.ratio_a2()));
  }
  for (const Split& s : splits) {
    EdgeSet e = join(h, pair_edges(inst, s.a, s.b, hblocks, cfg.m_limit));
    e = join(std::move(e), mst_completion(inst, inst.color_class(s.mono), hblocks));
    cb.graphs.push_back(make_solution(inst, "a2", std::move(e), cfg.ratio_a2()));
  }
  for (int i = 0; i < 6; ++i) cb.labels.push_back(names[i]);
  cb.chosen = 0;
  for (int i = 1; i < 6; ++i)
    if (cb.graphs[i].cost < cb.graphs[cb.chosen].cost) cb.chosen = i;
  return cb.graphs[cb.chosen];
}

}  // namespace mcsg
