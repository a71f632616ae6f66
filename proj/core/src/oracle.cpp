#include "mcsg/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <tuple>

#include "mcsg/approx3.hpp"
#include "mcsg/collinear.hpp"
#include "mcsg/core.hpp"
#include "mcsg/dsu.hpp"
#include "mcsg/exact2.hpp"
#include "mcsg/mst.hpp"

namespace mcsg {

EdgeSet candidate_edges(const Instance& inst, bool star_only) {
  std::vector<int> pos;
  if (star_only) {
    std::vector<int> order = collinear_order(inst);
    if (order.empty()) throw InputError("star-only candidates need collinear input");
    pos.assign(inst.n(), 0);
    for (int i = 0; i < inst.n(); ++i) pos[order[i]] = i;
    std::vector<std::tuple<double, int, int>> tmp;
    for (int a = 0; a < inst.n(); ++a) {
      for (int b = a + 1; b < inst.n(); ++b) {
        ColorSet g = inst.points[a].colors & inst.points[b].colors;
        if (g.empty()) continue;
        int lo = std::min(pos[a], pos[b]), hi = std::max(pos[a], pos[b]);
        bool ok = true;
        for (int r = lo + 1; r < hi && ok; ++r)
          if (g.subset_of(inst.points[order[r]].colors)) ok = false;
        if (ok) tmp.emplace_back(dist(inst.points[a], inst.points[b]), a, b);
      }
    }
    std::sort(tmp.begin(), tmp.end());
    EdgeSet out;
    for (auto& [w, a, b] : tmp) out.emplace_back(a, b);
    return out;
  }
  std::vector<std::tuple<double, int, int>> tmp;
  for (int a = 0; a < inst.n(); ++a)
    for (int b = a + 1; b < inst.n(); ++b)
      if (!(inst.points[a].colors & inst.points[b].colors).empty())
        tmp.emplace_back(dist(inst.points[a], inst.points[b]), a, b);
  std::sort(tmp.begin(), tmp.end());
  EdgeSet out;
  for (auto& [w, a, b] : tmp) out.emplace_back(a, b);
  return out;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const Instance& inst, const OracleBudget& budget, const OracleOptions& opts)
      : inst_(inst), budget_(budget) {
    cand_ = candidate_edges(inst, opts.star_only);
    for (const Edge& r : opts.required) {
      if ((inst.points[r.a].colors & inst.points[r.b].colors).empty())
        throw InputError("required edge has no shared color");
      required_.push_back(r);
    }
    required_ = canonical(required_);
    cand_.erase(std::remove_if(cand_.begin(), cand_.end(),
                               [&](const Edge& e) { return std::binary_search(required_.begin(), required_.end(), e); }),
                cand_.end());
    if (static_cast<int>(cand_.size()) > budget.max_candidate_edges)
      throw Refusal("oracle: " + std::to_string(cand_.size()) + " candidate edges exceed budget " +
                    std::to_string(budget.max_candidate_edges));
    const int E = static_cast<int>(cand_.size());
    w_.resize(E);
    color_.resize(E);
    for (int j = 0; j < E; ++j) {
      w_[j] = edge_length(inst, cand_[j]);
      color_[j] = inst.points[cand_[j].a].colors & inst.points[cand_[j].b].colors;
    }
    const int k = inst.k;
    by_color_.assign(k + 1, {});
    prefix_.assign(k + 1, {0.0});
    for (int j = 0; j < E; ++j)
      for (int c : color_[j].colors()) {
        by_color_[c].push_back(j);
        prefix_[c].push_back(prefix_[c].back() + w_[j]);
      }
    dsu_.resize(k + 1);
    need_.assign(k + 1, 0);
    for (int c = 1; c <= k; ++c) {
      dsu_[c].reset(inst.n(), false);
      int sz = static_cast<int>(inst.color_class(c).size());
      need_[c] = std::max(0, sz - 1);
    }
    for (const Edge& r : required_) {
      base_cost_ += edge_length(inst, r);
      for (int c : (inst.points[r.a].colors & inst.points[r.b].colors).colors())
        if (dsu_[c].unite(r.a, r.b)) --need_[c];
    }
  }

  Solution run() {
    start_ = std::chrono::steady_clock::now();
    dfs(0, base_cost_);
    if (!found_) throw InvariantViolation("oracle found no feasible solution");
    EdgeSet e = required_;
    for (int j : best_set_) e.push_back(cand_[j]);
    return make_solution(inst_, "oracle", std::move(e), 1.0);
  }

 private:
  double lower_bound(int j) const {
    double lb = 0;
    for (int c = 1; c <= inst_.k; ++c) {
      if (need_[c] == 0) continue;
      const auto& lst = by_color_[c];
      int p = static_cast<int>(std::lower_bound(lst.begin(), lst.end(), j) - lst.begin());
      int avail = static_cast<int>(lst.size()) - p;
      if (avail < need_[c]) return kInf;
      lb = std::max(lb, prefix_[c][p + need_[c]] - prefix_[c][p]);
    }
    return lb;
  }

  bool done() const {
    for (int c = 1; c <= inst_.k; ++c)
      if (need_[c] > 0) return false;
    return true;
  }

  void dfs(int j, double cost) {
    if ((++nodes_ & 0xfff) == 0) {
      double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      if (el > budget_.time_limit) throw Refusal("oracle: time limit exceeded");
    }
    if (done()) {
      if (!found_ || cost < best_) {
        best_ = cost;
        best_set_ = cur_;
        found_ = true;
      }
      return;
    }
    if (j == static_cast<int>(cand_.size())) return;
    double lb = lower_bound(j);
    if (lb == kInf || (found_ && cost + lb >= best_)) return;

    const Edge& e = cand_[j];
    std::vector<std::pair<int, int>> marks;
    for (int c : color_[j].colors()) {
      int mark = dsu_[c].checkpoint();
      if (dsu_[c].unite(e.a, e.b)) {
        --need_[c];
        marks.emplace_back(c, mark);
      }
    }
    if (!marks.empty()) {
      cur_.push_back(j);
      dfs(j + 1, cost + w_[j]);
      cur_.pop_back();
      for (auto [c, mark] : marks) {
        dsu_[c].rollback(mark);
        ++need_[c];
      }
    }
    dfs(j + 1, cost);
  }

  const Instance& inst_;
  OracleBudget budget_;
  EdgeSet cand_, required_;
  std::vector<double> w_;
  std::vector<ColorSet> color_;
  std::vector<std::vector<int>> by_color_;
  std::vector<std::vector<double>> prefix_;
  std::vector<Dsu> dsu_;
  std::vector<int> need_;
  std::vector<int> cur_, best_set_;
  double base_cost_ = 0;
  double best_ = kInf;
  bool found_ = false;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

Solution brute_force(const Instance& inst, const OracleBudget& budget, const OracleOptions& opts) {
  BranchAndBound bb(inst, budget, opts);
  return bb.run();
}

Solution brute_force_naive(const Instance& inst, const OracleOptions& opts, int max_edges) {
  EdgeSet cand = candidate_edges(inst, opts.star_only);
  EdgeSet req = canonical(opts.required);
  cand.erase(std::remove_if(cand.begin(), cand.end(),
                            [&](const Edge& e) { return std::binary_search(req.begin(), req.end(), e); }),
             cand.end());
  const int E = static_cast<int>(cand.size());
  if (E > max_edges) throw Refusal("naive oracle: " + std::to_string(E) + " candidate edges exceed " + std::to_string(max_edges));
  double best = kInf;
  EdgeSet best_set;
  EdgeSet trial;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << E); ++mask) {
    trial = req;
    for (int j = 0; j < E; ++j)
      if (mask >> j & 1) trial.push_back(cand[j]);
    double c = solution_cost(inst, trial);
    if (c >= best) continue;
    if (!is_csg(inst, trial)) continue;
    best = c;
    best_set = trial;
  }
  if (best == kInf) throw InvariantViolation("naive oracle found no feasible solution");
  return make_solution(inst, "oracle-naive", std::move(best_set), 1.0);
}

namespace {

Instance bench_instance(const BenchSpec& spec, std::uint64_t seed) {
  int span = spec.n_max - spec.n_min + 1;
  if (span < 1) throw InputError("bench: n_max < n_min");
  int n = spec.n_min + static_cast<int>(seed % static_cast<std::uint64_t>(span));
  if (spec.family == "random") return generate_random(n, spec.k, spec.multichromatic_fraction, seed);
  if (spec.family == "collinear") return generate_collinear(n, spec.k, spec.multichromatic_fraction, seed);
  if (spec.family == "allblack") {
    Instance inst = generate_random(n, spec.k, 0.0, seed);
    for (Point& p : inst.points) p.colors = ColorSet::all(spec.k);
    return inst;
  }
  throw InputError("unknown bench family: " + spec.family);
}

Solution run_algo(const std::string& algo, const Instance& inst, double& bound) {
  ApproxConfig cfg;
  if (algo == "a1") {
    bound = 2.0;
    return approx_a1(inst, cfg);
  }
  if (algo == "a2") {
    bound = cfg.ratio_a2();
    return approx_a2(inst, cfg);
  }
  if (algo == "exact2") {
    bound = 1.0;
    return solve_exact2(inst);
  }
  if (algo == "dp") {
    bound = 1.0;
    return dp_solve(inst);
  }
  if (algo == "pairing") {
    bound = static_cast<double>((inst.k + 1) / 2);
    return approx_pairing(inst, default_pairing(inst.k), cfg);
  }
  throw InputError("unknown algorithm: " + algo);
}

}  // namespace

BenchReport ratio_bench(const BenchSpec& spec, const std::vector<std::string>& algos, int seeds,
                        const OracleBudget& budget) {
  BenchReport rep;
  std::vector<BenchSummary> sums(algos.size());
  std::vector<double> ratio_sum(algos.size(), 0.0);
  for (size_t a = 0; a < algos.size(); ++a) sums[a].algo = algos[a];
  for (int s = 0; s < seeds; ++s) {
    std::uint64_t seed = spec.first_seed + static_cast<std::uint64_t>(s);
    Instance inst;
    double opt = 0;
    try {
      inst = bench_instance(spec, seed);
      opt = brute_force(inst, budget).cost;
    } catch (const std::exception& e) {
      rep.failures.push_back("seed " + std::to_string(seed) + ": " + e.what());
      continue;
    }
    for (size_t a = 0; a < algos.size(); ++a) {
      double bound = 0;
      Solution sol;
      try {
        sol = run_algo(algos[a], inst, bound);
        check_solution(inst, sol);
      } catch (const std::exception& e) {
        rep.failures.push_back("seed " + std::to_string(seed) + " " + algos[a] + ": " + e.what());
        continue;
      }
      double ratio = opt > 0 ? sol.cost / opt : 1.0;
      rep.rows.push_back({seed, inst.n(), inst.k, opt, algos[a], sol.cost, ratio});
      BenchSummary& sm = sums[a];
      sm.bound = bound;
      ++sm.count;
      sm.max_ratio = std::max(sm.max_ratio, ratio);
      ratio_sum[a] += ratio;
      if (sol.cost > bound * opt + 1e-9) ++sm.violations;
    }
  }
  for (size_t a = 0; a < algos.size(); ++a)
    if (sums[a].count > 0) sums[a].mean_ratio = ratio_sum[a] / sums[a].count;
  rep.summaries = std::move(sums);
  return rep;
}

std::string bench_csv(const BenchReport& report) {
  std::string out = "seed,n,k,opt,algo,cost,ratio\n";
  char buf[256];
  for (const BenchRow& r : report.rows) {
    std::snprintf(buf, sizeof buf, "%llu,%d,%d,%.17g,%s,%.17g,%.17g\n", static_cast<unsigned long long>(r.seed), r.n,
                  r.k, r.opt, r.algo.c_str(), r.cost, r.ratio);
    out += buf;
  }
  return out;
}

}  // namespace mcsg
