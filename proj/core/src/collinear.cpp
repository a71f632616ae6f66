#include "mcsg/collinear.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <string>
#include <unordered_map>

#include "mcsg/core.hpp"
#include "mcsg/mst.hpp"

namespace mcsg {

namespace {

constexpr int kMaxGround = 8;

struct RgsTable {
  std::vector<std::vector<std::uint8_t>> list;
  std::unordered_map<std::uint64_t, int> rank;
};

std::uint64_t encode(const std::uint8_t* labels, int t) {
  std::uint64_t key = 0;
  for (int i = 0; i < t; ++i) key |= static_cast<std::uint64_t>(labels[i]) << (4 * i);
  return key;
}

const RgsTable& rgs_table(int t) {
  static const std::vector<RgsTable> tables = [] {
    std::vector<RgsTable> out(kMaxGround + 1);
    for (int len = 0; len <= kMaxGround; ++len) {
      RgsTable& tb = out[len];
      std::vector<std::uint8_t> cur(len, 0);
      auto rec = [&](auto&& self, int pos, int maxlab) -> void {
        if (pos == len) {
          tb.rank.emplace(encode(cur.data(), len), static_cast<int>(tb.list.size()));
          tb.list.push_back(cur);
          return;
        }
        for (int l = 0; l <= maxlab + 1; ++l) {
          cur[pos] = static_cast<std::uint8_t>(l);
          self(self, pos + 1, std::max(maxlab, l));
        }
      };
      rec(rec, 0, -1);
    }
    return out;
  }();
  if (t < 0 || t > kMaxGround) throw Refusal("collinear: a color is carried by more than 8 cut edges (state budget)");
  return tables[t];
}

void canonicalize(std::uint8_t* labels, int t) {
  std::array<int, 32> remap;
  remap.fill(-1);
  int next = 0;
  for (int i = 0; i < t; ++i) {
    int l = labels[i];
    if (remap[l] < 0) remap[l] = next++;
    labels[i] = static_cast<std::uint8_t>(remap[l]);
  }
}

// One color of the hat map. Node 0 is p_i, node 1+l is block l of the next
// partition. prev_pos[e] is -1 when prev edge e ends at p_i, else the
// position of the same edge in the next list. Returns whether p_i's
// component is reached by some prev edge.
bool hat_one(const std::vector<int>& prev_pos, const std::vector<char>& from_pt, const std::uint8_t* next_rgs,
             std::uint8_t* out) {
  const int tn = static_cast<int>(from_pt.size());
  std::array<int, kMaxGround + 2> parent;
  for (int v = 0; v <= tn; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int e = 0; e < tn; ++e)
    if (from_pt[e]) {
      int a = find(0), b = find(1 + next_rgs[e]);
      if (a != b) parent[b] = a;
    }
  bool touches = false;
  int root0 = find(0);
  for (size_t e = 0; e < prev_pos.size(); ++e) {
    int node = prev_pos[e] < 0 ? 0 : 1 + next_rgs[prev_pos[e]];
    int r = find(node);
    if (r == root0) touches = true;
    out[e] = static_cast<std::uint8_t>(r);
  }
  canonicalize(out, static_cast<int>(prev_pos.size()));
  return touches;
}

void require_sorted(const Instance& inst) {
  std::vector<int> order = collinear_order(inst);
  if (order.empty()) throw InputError("points are not collinear");
  for (int i = 0; i < inst.n(); ++i)
    if (order[i] != i) throw InputError("points are not sorted along their line");
  validate_instance(inst);
}

int left_end(const Instance& inst, int i, ColorSet g) {
  for (int a = i - 1; a >= 0; --a)
    if (g.subset_of(inst.points[a].colors)) return a;
  return -1;
}

int right_end(const Instance& inst, int i, ColorSet g) {
  for (int b = i; b < inst.n(); ++b)
    if (g.subset_of(inst.points[b].colors)) return b;
  return -1;
}

}  // namespace

std::uint64_t bell_number(int t) {
  std::vector<std::vector<std::uint64_t>> tri{{1}};
  for (int i = 1; i <= t; ++i) {
    std::vector<std::uint64_t> row{tri.back().back()};
    for (std::uint64_t v : tri.back()) row.push_back(row.back() + v);
    tri.push_back(row);
  }
  return tri[t][0];
}

EdgeSet normalize_star(const Instance& inst, const EdgeSet& edges) {
  require_sorted(inst);
  std::deque<Edge> work(edges.begin(), edges.end());
  EdgeSet out;
  while (!work.empty()) {
    Edge e = work.front();
    work.pop_front();
    ColorSet g = inst.points[e.a].colors & inst.points[e.b].colors;
    int split = -1;
    if (!g.empty())
      for (int r = e.a + 1; r < e.b && split < 0; ++r)
        if (g.subset_of(inst.points[r].colors)) split = r;
    if (split < 0) {
      out.push_back(e);
    } else {
      work.emplace_back(e.a, split);
      work.emplace_back(split, e.b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<CutEdgeSet> cut_edges(const Instance& inst, int i, std::vector<ColorSet> gamma) {
  require_sorted(inst);
  if (i < 1 || i >= inst.n()) throw InputError("cut index out of range");
  std::sort(gamma.begin(), gamma.end());
  gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());
  CutEdgeSet cs;
  cs.i = i;
  for (ColorSet g : gamma) {
    if (g.empty()) throw InputError("empty color set in cut family");
    int a = left_end(inst, i, g), b = right_end(inst, i, g);
    if (a < 0 || b < 0) return std::nullopt;
    if ((inst.points[a].colors & inst.points[b].colors) != g) return std::nullopt;
    cs.gamma.push_back(g);
    cs.edges.emplace_back(a, b);
  }
  return cs;
}

bool is_valid_cut(const Instance& inst, const CutEdgeSet& cut) {
  for (int c = 1; c <= inst.k; ++c) {
    bool left = false, right = false;
    for (int j = 0; j < inst.n(); ++j) {
      if (!inst.points[j].colors.contains(c)) continue;
      (j < cut.i ? left : right) = true;
    }
    if (!left || !right) continue;
    bool carried = false;
    for (ColorSet g : cut.gamma)
      if (g.contains(c)) carried = true;
    if (!carried) return false;
  }
  return true;
}

bool compatible(const Instance& inst, const CutEdgeSet& prev, const CutEdgeSet& next) {
  (void)inst;
  if (next.i != prev.i + 1) return false;
  const int p = next.i - 1;  // p_i, 0-based
  EdgeSet a = canonical(prev.edges), b = canonical(next.edges);
  EdgeSet diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
  for (const Edge& e : diff)
    if (e.a != p && e.b != p) return false;
  return true;
}

PartitionVector hat_pi(const Instance& inst, const CutEdgeSet& prev, const CutEdgeSet& next,
                       const PartitionVector& pi_next) {
  if (!compatible(inst, prev, next)) throw InputError("hat_pi: cuts are not compatible");
  if (static_cast<int>(pi_next.size()) != inst.k) throw InputError("hat_pi: partition vector has wrong arity");
  const int p = next.i - 1;
  PartitionVector out(inst.k);
  for (int c = 1; c <= inst.k; ++c) {
    std::vector<int> next_ids;
    std::vector<char> from_pt;
    for (size_t e = 0; e < next.gamma.size(); ++e)
      if (next.gamma[e].contains(c)) {
        next_ids.push_back(static_cast<int>(e));
        from_pt.push_back(next.edges[e].a == p);
      }
    if (pi_next[c - 1].size() != next_ids.size()) throw InputError("hat_pi: partition ground set mismatch");
    std::vector<int> prev_pos;
    for (size_t e = 0; e < prev.gamma.size(); ++e) {
      if (!prev.gamma[e].contains(c)) continue;
      if (prev.edges[e].b == p) {
        prev_pos.push_back(-1);
        continue;
      }
      int pos = -1;
      for (size_t q = 0; q < next_ids.size(); ++q)
        if (next.edges[next_ids[q]] == prev.edges[e]) pos = static_cast<int>(q);
      if (pos < 0) throw InputError("hat_pi: persisting edge missing from next cut");
      prev_pos.push_back(pos);
    }
    std::vector<std::uint8_t> rgs(pi_next[c - 1].begin(), pi_next[c - 1].end());
    canonicalize(rgs.data(), static_cast<int>(rgs.size()));
    std::vector<std::uint8_t> res(prev_pos.size());
    hat_one(prev_pos, from_pt, rgs.data(), res.data());
    out[c - 1].assign(res.begin(), res.end());
  }
  return out;
}

namespace {

class Dp {
 public:
  Dp(const Instance& inst, const DpOptions& opts) : inst_(inst), opts_(opts) {
    n_ = inst.n();
    k_ = inst.k;
    G_ = (1 << k_) - 1;
    alpha_.resize(n_);
    for (int j = 0; j < n_; ++j) alpha_[j] = inst.points[j].colors.bits();
    for (int c = 1; c <= k_; ++c) {
      std::uint64_t m = 0;
      for (int g = 0; g < G_; ++g)
        if ((g + 1) >> (c - 1) & 1) m |= std::uint64_t{1} << g;
      cmask_[c] = m;
    }
    left_.assign(static_cast<size_t>(n_) * G_, -1);
    right_.assign(static_cast<size_t>(n_) * G_, -1);
    fm_.assign(n_, 0);
    std::vector<int> last(G_, -1), nxt(G_, -1);
    for (int t = 1; t < n_; ++t) {
      for (int g = 0; g < G_; ++g)
        if (sub(g, t - 1)) last[g] = t - 1;
      for (int g = 0; g < G_; ++g) left_[idx(t, g)] = last[g];
    }
    for (int t = n_ - 1; t >= 1; --t) {
      for (int g = 0; g < G_; ++g)
        if (sub(g, t)) nxt[g] = t;
      for (int g = 0; g < G_; ++g) right_[idx(t, g)] = nxt[g];
    }
    for (int t = 1; t < n_; ++t)
      for (int g = 0; g < G_; ++g) {
        int a = left_[idx(t, g)], b = right_[idx(t, g)];
        if (a >= 0 && b >= 0 && static_cast<int>(alpha_[a] & alpha_[b]) == g + 1) fm_[t] |= std::uint64_t{1} << g;
      }
    prefix_.assign(static_cast<size_t>(n_ + 1) * (k_ + 1), 0);
    for (int j = 0; j < n_; ++j)
      for (int c = 1; c <= k_; ++c)
        prefix_[static_cast<size_t>(j + 1) * (k_ + 1) + c] =
            prefix_[static_cast<size_t>(j) * (k_ + 1) + c] + ((alpha_[j] >> (c - 1)) & 1);
  }

  Solution run(DpStats* stats) {
    if (n_ == 1) return make_solution(inst_, "dp", {}, 1.0);
    layers_.resize(n_ + 1);
    build_first();
    record(1, stats);
    for (int t = 2; t <= n_; ++t) {
      step(t);
      layers_[t - 1].free_values();
      if (t < n_) record(t, stats);
    }
    Layer& fin = layers_[n_];
    if (fin.st.empty() || fin.st[0].val[0] == kInf) throw InvariantViolation("collinear DP found no solution");
    double best = fin.st[0].val[0];
    EdgeSet edges = reconstruct();
    Solution s = make_solution(inst_, "dp", std::move(edges), 1.0);
    if (!costs_equal(s.cost, best)) throw InvariantViolation("collinear DP reconstruction cost mismatch");
    if (stats)
      for (const CutStats& cs : stats->cuts) stats->total_entries += cs.finite_entries;
    return s;
  }

 private:
  struct State {
    std::uint64_t mask = 0;
    std::array<int, 7> tc{};
    std::array<std::uint64_t, 7> stride{};
    std::uint64_t P = 1;
    std::vector<double> val;
    std::vector<std::int32_t> bp;
  };
  struct Layer {
    std::vector<State> st;
    std::unordered_map<std::uint64_t, int> index;
    void free_values() {
      for (State& s : st) std::vector<double>().swap(s.val);
    }
  };

  size_t idx(int t, int g) const { return static_cast<size_t>(t) * G_ + g; }
  bool sub(int g, int j) const { return ((g + 1) & ~alpha_[j]) == 0; }
  int count(int c, int lo, int hi) const {  // points of color c in [lo, hi)
    return prefix_[static_cast<size_t>(hi) * (k_ + 1) + c] - prefix_[static_cast<size_t>(lo) * (k_ + 1) + c];
  }

  bool valid(int t, std::uint64_t mask) const {
    for (int c = 1; c <= k_; ++c)
      if (count(c, 0, t) > 0 && count(c, t, n_) > 0 && !(mask & cmask_[c])) return false;
    return true;
  }

  State make_state(std::uint64_t mask) const {
    State s;
    s.mask = mask;
    std::uint64_t P = 1;
    for (int c = 1; c <= k_; ++c) {
      int t = std::popcount(mask & cmask_[c]);
      s.tc[c] = t;
      s.stride[c] = P;
      std::uint64_t b = rgs_table(t).list.size();
      if (P > opts_.max_partition_vectors / b) throw Refusal("collinear: partition-vector budget exceeded");
      P *= b;
    }
    s.P = P;
    return s;
  }

  std::vector<std::uint64_t> valid_families(int t) const {
    std::uint64_t f = fm_[t];
    if (std::popcount(f) > opts_.max_family_size) throw Refusal("collinear: too many feasible color sets at one cut");
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = f;; s = (s - 1) & f) {
      if (valid(t, s)) out.push_back(s);
      if (s == 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void build_first() {
    Layer& L = layers_[1];
    for (std::uint64_t m : valid_families(1)) {
      State s = make_state(m);
      s.val.assign(s.P, 0.0);
      s.bp.assign(s.P, -1);
      L.index[m] = static_cast<int>(L.st.size());
      L.st.push_back(std::move(s));
    }
  }

  // Per-color inputs of the hat map for the transition prev mask -> next mask
  // while adding point p (0-based), p = t - 1.
  struct ColorLink {
    std::vector<int> prev_pos;
    std::vector<char> from_pt;
    bool need_touch = false;
  };

  ColorLink link(int c, int p, std::uint64_t prev_mask, std::uint64_t next_mask) const {
    ColorLink lk;
    std::vector<int> next_g;
    for (int g = 0; g < G_; ++g)
      if ((next_mask >> g & 1) && (cmask_[c] >> g & 1)) {
        next_g.push_back(g);
        lk.from_pt.push_back(sub(g, p));
      }
    for (int g = 0; g < G_; ++g) {
      if (!((prev_mask >> g & 1) && (cmask_[c] >> g & 1))) continue;
      if (sub(g, p)) {
        lk.prev_pos.push_back(-1);
      } else {
        auto it = std::find(next_g.begin(), next_g.end(), g);
        lk.prev_pos.push_back(static_cast<int>(it - next_g.begin()));
      }
    }
    lk.need_touch = ((alpha_[p] >> (c - 1)) & 1) && count(c, 0, p) > 0;
    return lk;
  }

  // Table over next partitions of color c: rank of the hat partition, -1 if (d2) fails.
  std::vector<int> hat_table(const ColorLink& lk, int tn) const {
    const RgsTable& nt = rgs_table(tn);
    const RgsTable& pt = rgs_table(static_cast<int>(lk.prev_pos.size()));
    std::vector<int> out(nt.list.size());
    std::array<std::uint8_t, 64> buf{};
    for (size_t r = 0; r < nt.list.size(); ++r) {
      bool touch = hat_one(lk.prev_pos, lk.from_pt, nt.list[r].data(), buf.data());
      if (lk.need_touch && !touch) {
        out[r] = -1;
        continue;
      }
      out[r] = pt.rank.at(encode(buf.data(), static_cast<int>(lk.prev_pos.size())));
    }
    return out;
  }

  void step(int t) {
    const int p = t - 1;
    std::uint64_t A = 0;
    for (int g = 0; g < G_; ++g)
      if (sub(g, p)) A |= std::uint64_t{1} << g;
    const std::uint64_t F = A & fm_[t - 1];
    Layer& prev = layers_[t - 1];
    Layer& cur = layers_[t];
    std::vector<std::uint64_t> nexts = t < n_ ? valid_families(t) : std::vector<std::uint64_t>{0};
    std::vector<std::uint64_t> subs;
    for (std::uint64_t s = F;; s = (s - 1) & F) {
      subs.push_back(s);
      if (s == 0) break;
    }
    std::sort(subs.begin(), subs.end());

    for (std::uint64_t mn : nexts) {
      State ns = make_state(mn);
      ns.val.assign(ns.P, kInf);
      ns.bp.assign(ns.P, -1);
      bool any = false;
      const std::uint64_t fixed = mn & ~A;
      for (std::uint64_t S : subs) {
        std::uint64_t mp = fixed | S;
        auto it = prev.index.find(mp);
        if (it == prev.index.end()) continue;
        const State& ps = prev.st[it->second];
        double charge = 0;
        for (int g = 0; g < G_; ++g)
          if (S >> g & 1) charge += dist(inst_.points[left_[idx(t - 1, g)]], inst_.points[p]);
        std::array<std::vector<int>, 7> tables;
        bool dead = false;
        for (int c = 1; c <= k_ && !dead; ++c) {
          tables[c] = hat_table(link(c, p, mp, mn), ns.tc[c]);
          dead = std::all_of(tables[c].begin(), tables[c].end(), [](int v) { return v < 0; });
        }
        if (dead) continue;
        // Odometer over per-color next partitions.
        std::array<size_t, 7> digit{};
        while (true) {
          std::uint64_t ni = 0, pi = 0;
          bool ok = true;
          for (int c = 1; c <= k_; ++c) {
            int h = tables[c][digit[c]];
            if (h < 0) {
              ok = false;
              break;
            }
            ni += digit[c] * ns.stride[c];
            pi += static_cast<std::uint64_t>(h) * ps.stride[c];
          }
          if (ok) {
            double v = ps.val[pi];
            if (v != kInf && charge + v < ns.val[ni]) {
              ns.val[ni] = charge + v;
              ns.bp[ni] = it->second;
              any = true;
            }
          }
          int c = 1;
          while (c <= k_) {
            if (++digit[c] < tables[c].size()) break;
            digit[c] = 0;
            ++c;
          }
          if (c > k_) break;
        }
      }
      if (!any) continue;
      cur.index[mn] = static_cast<int>(cur.st.size());
      cur.st.push_back(std::move(ns));
    }
  }

  void record(int t, DpStats* stats) const {
    if (!stats) return;
    const Layer& L = layers_[t];
    CutStats cs;
    cs.cut = t;
    cs.gamma_states = static_cast<int>(L.st.size());
    for (const State& s : L.st) {
      cs.max_partition_vectors = std::max(cs.max_partition_vectors, s.P);
      for (int c = 1; c <= k_; ++c) cs.max_ground = std::max(cs.max_ground, s.tc[c]);
      for (std::int32_t b : s.bp) cs.finite_entries += (b >= 0 || t == 1) ? 1 : 0;
    }
    stats->cuts.push_back(cs);
  }

  EdgeSet reconstruct() const {
    EdgeSet edges;
    int si = 0;
    std::uint64_t ni = 0;
    for (int t = n_; t >= 2; --t) {
      const State& ns = layers_[t].st[si];
      int pi_state = ns.bp[ni];
      if (pi_state < 0) throw InvariantViolation("collinear DP: broken back-pointer");
      const State& ps = layers_[t - 1].st[pi_state];
      const int p = t - 1;
      std::uint64_t A = 0;
      for (int g = 0; g < G_; ++g)
        if (sub(g, p)) A |= std::uint64_t{1} << g;
      std::uint64_t S = ps.mask & A;
      for (int g = 0; g < G_; ++g)
        if (S >> g & 1) edges.emplace_back(left_[idx(t - 1, g)], p);
      std::uint64_t pi = 0;
      for (int c = 1; c <= k_; ++c) {
        std::uint64_t digit = (ni / ns.stride[c]) % rgs_table(ns.tc[c]).list.size();
        ColorLink lk = link(c, p, ps.mask, ns.mask);
        std::array<std::uint8_t, 64> buf{};
        hat_one(lk.prev_pos, lk.from_pt, rgs_table(ns.tc[c]).list[digit].data(), buf.data());
        int h = rgs_table(static_cast<int>(lk.prev_pos.size())).rank.at(encode(buf.data(), static_cast<int>(lk.prev_pos.size())));
        pi += static_cast<std::uint64_t>(h) * ps.stride[c];
      }
      si = pi_state;
      ni = pi;
    }
    return edges;
  }

  const Instance& inst_;
  DpOptions opts_;
  int n_ = 0, k_ = 0, G_ = 0;
  std::vector<std::uint32_t> alpha_;
  std::array<std::uint64_t, 7> cmask_{};
  std::vector<int> left_, right_;
  std::vector<std::uint64_t> fm_;
  std::vector<int> prefix_;
  std::vector<Layer> layers_;
};

}  // namespace

Solution dp_solve(const Instance& inst, const DpOptions& opts, DpStats* stats) {
  validate_instance(inst);
  if (inst.k > opts.k_guard) throw Refusal("collinear: k = " + std::to_string(inst.k) + " exceeds guard " + std::to_string(opts.k_guard));
  if (inst.k > 6) throw Refusal("collinear: k above 6 is not supported");
  std::vector<int> order = collinear_order(inst);
  if (order.empty()) throw InputError("dp_solve needs collinear points");
  Instance sorted;
  sorted.k = inst.k;
  for (int i : order) sorted.points.push_back(inst.points[i]);
  if (stats) *stats = DpStats{};
  Dp dp(sorted, opts);
  Solution s = dp.run(stats);
  for (Edge& e : s.edges) e = Edge(order[e.a], order[e.b]);
  return make_solution(inst, "dp", s.edges, 1.0);
}

}  // namespace mcsg
