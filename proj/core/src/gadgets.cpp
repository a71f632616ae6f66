#include "mcsg/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

#include "mcsg/core.hpp"
#include "mcsg/mst.hpp"

namespace mcsg {

namespace {

constexpr std::uint32_t kRed = 1;
constexpr std::uint32_t kBlue = 2;
constexpr std::uint32_t kYellow = 4;
constexpr std::uint32_t kPurple = kRed | kBlue;
constexpr std::uint32_t kBlack = kRed | kBlue | kYellow;

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool same_vars(const MonotoneClause& a, const MonotoneClause& b) { return a.vars == b.vars; }

// b lies inside a gap between consecutive literals of a. Equal 2-clauses
// nest by index.
bool contains(const MonotoneCnf& cnf, int ia, int ib) {
  const MonotoneClause& a = cnf.clauses[ia];
  const MonotoneClause& b = cnf.clauses[ib];
  if (ia == ib || a.positive != b.positive) return false;
  if (same_vars(a, b)) return a.vars.size() == 2 && ia < ib;
  for (size_t g = 0; g + 1 < a.vars.size(); ++g)
    if (a.vars[g] <= b.vars.front() && b.vars.back() <= a.vars[g + 1]) return true;
  return false;
}

bool disjoint(const MonotoneClause& a, const MonotoneClause& b) {
  return a.vars.back() <= b.vars.front() || b.vars.back() <= a.vars.front();
}

// 0: clause ends at v, 1: v is the middle literal, 2: clause starts at v.
int foot_kind(const MonotoneClause& c, int v) {
  if (v == c.vars.back()) return 0;
  if (v == c.vars.front()) return 2;
  return 1;
}

struct Segment {
  std::uint32_t color;
  std::int64_t ox, oy;  // tenths
  std::int64_t x0, y0, x1, y1;
  int blue_mode;  // 0 none, 1 by sign of y, 2 plus offset, 3 minus offset
};

struct Drawing {
  std::vector<Segment> segs;
  std::vector<std::pair<GridPoint, std::uint32_t>> extras;
};

GridPoint at(std::int64_t x, std::int64_t y) { return {x * 10, y * 10}; }

std::uint64_t seg_len(const Segment& s) {
  return static_cast<std::uint64_t>(std::llabs(s.x1 - s.x0) + std::llabs(s.y1 - s.y0) + 1);
}

template <class F>
void each_point(const Segment& s, F&& f) {
  std::int64_t dx = (s.x1 > s.x0) - (s.x1 < s.x0), dy = (s.y1 > s.y0) - (s.y1 < s.y0);
  std::int64_t x = s.x0, y = s.y0;
  while (true) {
    f(x, y);
    if (x == s.x1 && y == s.y1) break;
    x += dx;
    y += dy;
  }
}

Drawing draw(const GadgetLayout& L, const MonotoneCnf& cnf) {
  Drawing d;
  const std::int64_t U = L.unit, H = L.half_rib;
  const std::int64_t Yw = H + 3 * U, Ytop = H + 4 * U;
  const std::int64_t Xl = -3 * U;
  auto red = [&](std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1, int blue_mode) {
    d.segs.push_back({kRed, 0, 0, x0, y0, x1, y1, blue_mode});
  };
  auto chain = [&](std::uint32_t c, std::int64_t ox, std::int64_t oy, std::int64_t x0, std::int64_t y0,
                   std::int64_t x1, std::int64_t y1) { d.segs.push_back({c, ox, oy, x0, y0, x1, y1, 0}); };

  std::int64_t Xr = Xl;
  std::int64_t prev_xc = 0;
  for (size_t j = 0; j < L.ribs.size(); ++j) {
    const RibLayout& rb = L.ribs[j];
    const std::int64_t x = rb.x, s = rb.size;
    Xr = std::max(Xr, rb.upper.cage.x / 10);
    chain(kRed, 0, 0, x, -H + 1, x, H - 1);
    chain(kBlue, 0, 0, x - 1, -H, x - 1, H);
    chain(kYellow, 0, 0, x + 1, -H, x + 1, H);

    const std::int64_t xc = x + 2 * s + 2 * U;
    red(xc, -Yw, xc, Yw, 1);
    red(x + s, Yw, xc, Yw, 1);
    red(x + s, H + s + 1, x + s, Yw, 1);
    red(x + s, -Yw, xc, -Yw, 1);
    red(x + s, -Yw, x + s, -H - s - 1, 1);
    if (j > 0) {
      bool top_blocked = rb.has_clause_point && rb.clause_upper;
      std::int64_t y = top_blocked ? -Yw : Yw;
      red(prev_xc, y, xc, y, 1);
    }
    prev_xc = xc;
    d.extras.push_back({{(x + s) * 10 + 8, (H + s) * 10 + 6}, kBlue});
    d.extras.push_back({{(x + s) * 10 - 8, (-H - s) * 10 - 6}, kBlue});
    for (auto [ox, oy] : std::vector<std::pair<int, int>>{{-2, 16}, {-12, 16}, {-6, 8}, {-14, 2}})
      d.extras.push_back({{xc * 10 + ox, oy}, kBlue});

    chain(kYellow, 6, 8, rb.upper.cage.x / 10, H, rb.upper.cage.x / 10, Ytop);
    chain(kYellow, -6, -8, rb.lower.cage.x / 10, -Ytop, rb.lower.cage.x / 10, -H);
  }
  chain(kYellow, 6, 8, Xl, Ytop, Xr, Ytop);
  chain(kYellow, -6, -8, Xl + 2, -Ytop, Xr, -Ytop);
  chain(kYellow, 6, 8, Xl, 0, Xl, Ytop);
  chain(kYellow, -6, -8, Xl + 2, -Ytop, Xl + 2, 1);

  for (size_t ci = 0; ci < cnf.clauses.size(); ++ci) {
    std::vector<std::int64_t> feet;
    for (const RibLayout& rb : L.ribs)
      if (rb.has_clause_point && rb.clause == static_cast<int>(ci)) feet.push_back(rb.x);
    std::sort(feet.begin(), feet.end());
    const std::int64_t sg = cnf.clauses[ci].positive ? 1 : -1;
    const std::int64_t level = H + 5 * U + L.clause_level[ci] * U;
    const std::int64_t foot_y = H + 2 * L.delta_units;
    const int mode = sg > 0 ? 2 : 3;
    for (std::int64_t fx : feet) {
      red(fx, sg * (foot_y + 1), fx, sg * level, mode);
      d.extras.push_back({{fx * 10 + sg * 8, sg * foot_y * 10 + sg * 6}, kBlue});
    }
    red(feet.front(), sg * level, feet.back(), sg * level, mode);
  }
  return d;
}

std::uint64_t estimate(const Drawing& d) {
  std::uint64_t n = d.extras.size();
  for (const Segment& s : d.segs) n += seg_len(s) * (s.blue_mode ? 2 : 1);
  return n;
}

std::vector<std::pair<GridPoint, std::uint32_t>> actives(const GadgetLayout& L) {
  std::vector<std::pair<GridPoint, std::uint32_t>> out;
  for (const RibLayout& rb : L.ribs) {
    for (const Switch* sw : {&rb.upper, &rb.lower}) {
      out.push_back({sw->tip, kBlack});
      out.push_back({sw->cage, kBlack});
      out.push_back({sw->relay, kPurple});
    }
    if (rb.has_clause_point) out.push_back({rb.clause_point, kPurple});
  }
  return out;
}

struct Packed {
  std::int64_t x, y;
  std::uint32_t c;
  bool operator<(const Packed& o) const { return std::tie(x, y, c) < std::tie(o.x, o.y, o.c); }
};

}  // namespace

MonotoneCnf parse_cnf(std::istream& in) {
  MonotoneCnf cnf;
  std::string line;
  bool header = false;
  int declared = 0;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      ls >> p >> fmt >> cnf.num_vars >> declared;
      if (!ls || fmt != "mcnf") throw InputError("bad cnf header: " + line);
      header = true;
      continue;
    }
    if (!header) throw InputError("cnf clause before header");
    char sign = 0;
    ls >> sign;
    if (sign != '+' && sign != '-') throw InputError("clause must start with + or -: " + line);
    MonotoneClause cl;
    cl.positive = sign == '+';
    int v;
    while (ls >> v) cl.vars.push_back(v);
    if (!ls.eof()) throw InputError("bad clause line: " + line);
    std::sort(cl.vars.begin(), cl.vars.end());
    cnf.clauses.push_back(cl);
  }
  if (!header) throw InputError("missing cnf header");
  if (static_cast<int>(cnf.clauses.size()) != declared)
    throw InputError("cnf declares " + std::to_string(declared) + " clauses, found " + std::to_string(cnf.clauses.size()));
  validate_cnf(cnf);
  return cnf;
}

MonotoneCnf load_cnf_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  return parse_cnf(f);
}

std::string format_cnf(const MonotoneCnf& cnf) {
  std::ostringstream os;
  os << "p mcnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const MonotoneClause& c : cnf.clauses) {
    os << (c.positive ? '+' : '-');
    for (int v : c.vars) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

void validate_cnf(const MonotoneCnf& cnf) {
  if (cnf.num_vars < 1) throw InputError("cnf needs at least one variable");
  if (cnf.clauses.empty()) throw InputError("cnf needs at least one clause");
  for (const MonotoneClause& c : cnf.clauses) {
    if (c.vars.size() < 2 || c.vars.size() > 3) throw InputError("clause degree must be 2 or 3");
    for (size_t i = 0; i < c.vars.size(); ++i) {
      if (c.vars[i] < 1 || c.vars[i] > cnf.num_vars) throw InputError("variable out of range in clause");
      if (i > 0 && c.vars[i] <= c.vars[i - 1]) throw InputError("clause literals must be distinct and ascending");
    }
  }
  const int m = static_cast<int>(cnf.clauses.size());
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const MonotoneClause &A = cnf.clauses[a], &B = cnf.clauses[b];
      if (A.positive != B.positive) continue;
      if (disjoint(A, B) && !same_vars(A, B)) continue;
      if (contains(cnf, a, b) || contains(cnf, b, a)) continue;
      throw InputError("clauses " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " cross");
    }
}

bool satisfies(const MonotoneCnf& cnf, const std::vector<bool>& assignment) {
  if (static_cast<int>(assignment.size()) != cnf.num_vars) throw InputError("assignment size mismatch");
  for (const MonotoneClause& c : cnf.clauses) {
    bool ok = false;
    for (int v : c.vars) ok = ok || (assignment[v - 1] == c.positive);
    if (!ok) return false;
  }
  return true;
}

std::vector<bool> parse_assignment(std::istream& in, int num_vars) {
  std::vector<int> seen(num_vars, 0);
  std::vector<bool> out(num_vars, false);
  std::string tok;
  while (in >> tok) {
    int lit = 0;
    try {
      size_t used = 0;
      lit = std::stoi(tok, &used);
      if (used != tok.size()) throw InputError("");
    } catch (...) {
      throw InputError("bad literal in assignment: " + tok);
    }
    if (lit == 0) continue;
    int v = std::abs(lit);
    if (v > num_vars) throw InputError("assignment literal out of range: " + tok);
    if (seen[v - 1]++) throw InputError("variable assigned twice: " + std::to_string(v));
    out[v - 1] = lit > 0;
  }
  for (int v = 0; v < num_vars; ++v)
    if (!seen[v]) throw InputError("variable missing from assignment: " + std::to_string(v + 1));
  return out;
}

GadgetLayout plan_gadget(const MonotoneCnf& cnf) {
  validate_cnf(cnf);
  GadgetLayout L;
  const int m = static_cast<int>(cnf.clauses.size());
  L.m = m;
  L.num_vars = cnf.num_vars;
  for (const MonotoneClause& c : cnf.clauses) L.r += static_cast<int>(c.vars.size());
  const std::int64_t r = L.r;
  L.unit = 500 * r * r;
  L.delta_units = 50 * r;
  L.epsilon = 1.0 / static_cast<double>(L.unit);
  L.delta = 1.0 / (10.0 * static_cast<double>(r));
  L.half_rib = 4 * L.unit;
  L.pitch = 9 * L.unit;

  L.clause_level.assign(m, -1);
  std::function<int(int)> level = [&](int a) {
    if (L.clause_level[a] >= 0) return L.clause_level[a];
    int lv = 0;
    for (int b = 0; b < m; ++b)
      if (contains(cnf, a, b)) lv = std::max(lv, level(b) + 1);
    return L.clause_level[a] = lv;
  };
  for (int a = 0; a < m; ++a) level(a);

  std::vector<std::pair<int, int>> sections;
  for (int v = 1; v <= cnf.num_vars; ++v) {
    for (bool positive : {true, false}) {
      std::vector<int> at;
      for (int ci = 0; ci < m; ++ci) {
        const MonotoneClause& c = cnf.clauses[ci];
        if (c.positive == positive && std::find(c.vars.begin(), c.vars.end(), v) != c.vars.end()) at.push_back(ci);
      }
      std::sort(at.begin(), at.end(), [&](int a, int b) {
        int ka = foot_kind(cnf.clauses[a], v), kb = foot_kind(cnf.clauses[b], v);
        if (ka != kb) return ka < kb;
        if (ka == 0) return contains(cnf, b, a);
        return contains(cnf, a, b);
      });
      for (int ci : at) sections.emplace_back(v, ci);
    }
  }

  const std::int64_t H = L.half_rib;
  auto make_switch = [&](std::int64_t x, std::int64_t s, std::int64_t sg) {
    Switch sw;
    sw.tip = at(x, sg * H);
    sw.cage = at(x + 2 * s, sg * H);
    sw.relay = at(x + s, sg * (H + s));
    return sw;
  };
  for (size_t si = 0; si < sections.size(); ++si) {
    for (int half = 0; half < 2; ++half) {
      RibLayout rb;
      rb.section = static_cast<int>(si);
      rb.var = sections[si].first;
      rb.clause = sections[si].second;
      rb.small = half == 1;
      rb.x = static_cast<std::int64_t>(2 * si + half) * L.pitch;
      rb.size = rb.small ? L.delta_units : L.unit;
      rb.upper = make_switch(rb.x, rb.size, 1);
      rb.lower = make_switch(rb.x, rb.size, -1);
      if (rb.small) {
        rb.has_clause_point = true;
        rb.clause_upper = cnf.clauses[rb.clause].positive;
        std::int64_t sg = rb.clause_upper ? 1 : -1;
        rb.clause_point = at(rb.x, sg * (H + 2 * rb.size));
      }
      L.ribs.push_back(rb);
    }
  }
  L.active_points = static_cast<int>(actives(L).size());
  L.estimated_points = estimate(draw(L, cnf)) + L.active_points;
  return L;
}

double w_formula(double forced_cost, int r, int m, double epsilon, double delta) {
  const double s2 = std::sqrt(2.0);
  return forced_cost + 39.0 * r * epsilon + r * (2.0 + 2.0 * s2) + r * delta * (2.0 + 2.0 * s2) +
         m * delta * (2.0 * s2 - 2.0);
}

GadgetInstance build_gadget(const MonotoneCnf& cnf, const GadgetOptions& opts) {
  GadgetInstance g;
  g.cnf = cnf;
  g.layout = plan_gadget(cnf);
  const GadgetLayout& L = g.layout;
  if (L.estimated_points > opts.max_points)
    throw Refusal("gadget needs about " + std::to_string(L.estimated_points) + " points, limit " +
                  std::to_string(opts.max_points));
  g.r = L.r;
  g.m_clauses = L.m;
  g.epsilon = L.epsilon;
  g.delta = L.delta;

  Drawing d = draw(L, cnf);
  std::vector<Packed> pts;
  pts.reserve(L.estimated_points);
  for (const Segment& s : d.segs) {
    each_point(s, [&](std::int64_t x, std::int64_t y) {
      pts.push_back({x * 10 + s.ox, y * 10 + s.oy, s.color});
      if (s.blue_mode == 0) return;
      bool plus = s.blue_mode == 2 || (s.blue_mode == 1 && y >= 1);
      std::int64_t sg = plus ? 1 : -1;
      pts.push_back({x * 10 + sg * 8, y * 10 + sg * 6, kBlue});
    });
  }
  for (auto& [p, c] : d.extras) pts.push_back({p.x, p.y, c});
  for (auto& [p, c] : actives(L)) pts.push_back({p.x, p.y, c});
  std::sort(pts.begin(), pts.end());
  std::vector<Packed> uniq;
  uniq.reserve(pts.size());
  for (const Packed& p : pts) {
    if (!uniq.empty() && uniq.back().x == p.x && uniq.back().y == p.y) {
      if (uniq.back().c != p.c) throw InvariantViolation("gadget layout places two colors at one point");
      continue;
    }
    uniq.push_back(p);
  }
  pts.clear();
  pts.shrink_to_fit();

  const double scale = 1.0 / (10.0 * static_cast<double>(L.unit));
  g.instance.k = 3;
  g.instance.points.reserve(uniq.size());
  for (const Packed& p : uniq) {
    Point q;
    q.x = static_cast<double>(p.x) * scale;
    q.y = static_cast<double>(p.y) * scale;
    q.colors = ColorSet::from_bits(p.c);
    g.instance.points.push_back(q);
  }
  for (int i = 0; i < g.instance.n(); ++i)
    if (g.instance.points[i].multichromatic()) g.active_points.push_back(i);

  auto index_of = [&](const GridPoint& p) {
    auto it = std::lower_bound(uniq.begin(), uniq.end(), Packed{p.x, p.y, 0});
    if (it == uniq.end() || it->x != p.x || it->y != p.y) throw InvariantViolation("switch point missing");
    return static_cast<int>(it - uniq.begin());
  };
  for (const RibLayout& rb : L.ribs) {
    RibPoints rp;
    const Switch* sw[2] = {&rb.upper, &rb.lower};
    for (int h = 0; h < 2; ++h) {
      rp.tip[h] = index_of(sw[h]->tip);
      rp.cage[h] = index_of(sw[h]->cage);
      rp.relay[h] = index_of(sw[h]->relay);
    }
    if (rb.has_clause_point) rp.clause = index_of(rb.clause_point);
    g.rib_points.push_back(rp);
  }

  // Same-color pairs at most one epsilon apart (100 in squared tenths).
  const int n = static_cast<int>(uniq.size());
  for (int i = 0; i < n; ++i) {
    for (std::int64_t dx = 0; dx <= 10; ++dx) {
      auto it = std::lower_bound(uniq.begin(), uniq.end(), Packed{uniq[i].x + dx, uniq[i].y - 10, 0});
      for (; it != uniq.end() && it->x == uniq[i].x + dx && it->y <= uniq[i].y + 10; ++it) {
        int j = static_cast<int>(it - uniq.begin());
        if (j <= i) continue;
        std::int64_t dy = it->y - uniq[i].y;
        if (dx * dx + dy * dy > 100) continue;
        if ((uniq[i].c & it->c) == 0) continue;
        g.links.emplace_back(i, j);
      }
    }
  }
  std::sort(g.links.begin(), g.links.end());

  for (int c = 1; c <= 3; ++c) {
    ColorForest f;
    if (!forced_edges_local(g.instance, c, 1.5 * g.epsilon, f))
      throw InvariantViolation("gadget chain without an active point");
    g.forced.insert(g.forced.end(), f.edges.begin(), f.edges.end());
  }
  g.forced = canonical(g.forced);
  g.forced_cost = solution_cost(g.instance, g.forced);
  g.W = w_formula(g.forced_cost, g.r, g.m_clauses, g.epsilon, g.delta);
  return g;
}

double compute_w(const GadgetInstance& g) {
  EdgeSet forced;
  int r = 0;
  for (const MonotoneClause& c : g.cnf.clauses) r += static_cast<int>(c.vars.size());
  const double eps = 1.0 / (500.0 * r * r);
  for (int c = 1; c <= 3; ++c) {
    ColorForest f;
    if (!forced_edges_local(g.instance, c, 1.5 * eps, f)) throw InvariantViolation("gadget chain without an active point");
    forced.insert(forced.end(), f.edges.begin(), f.edges.end());
  }
  forced = canonical(forced);
  return w_formula(solution_cost(g.instance, forced), r, static_cast<int>(g.cnf.clauses.size()), eps,
                   1.0 / (10.0 * r));
}

Solution build_witness(const GadgetInstance& g, const std::vector<bool>& assignment) {
  if (!satisfies(g.cnf, assignment)) throw InputError("assignment does not satisfy the formula");
  const GadgetLayout& L = g.layout;
  std::vector<int> serving(g.cnf.clauses.size(), -1);
  for (size_t ci = 0; ci < g.cnf.clauses.size(); ++ci) {
    const MonotoneClause& c = g.cnf.clauses[ci];
    for (int v : c.vars)
      if (assignment[v - 1] == c.positive) {
        serving[ci] = v;
        break;
      }
  }
  EdgeSet edges = g.links;
  for (size_t j = 0; j < L.ribs.size(); ++j) {
    const RibLayout& rb = L.ribs[j];
    const RibPoints& rp = g.rib_points[j];
    const int on = assignment[rb.var - 1] ? 0 : 1;  // switch holding the black edge
    const int off = 1 - on;
    edges.emplace_back(rp.tip[on], rp.cage[on]);
    edges.emplace_back(rp.tip[on], rp.relay[on]);
    edges.emplace_back(rp.cage[off], rp.relay[off]);
    if (rb.has_clause_point && serving[rb.clause] == rb.var) {
      int h = rb.clause_upper ? 0 : 1;
      edges.emplace_back(rp.relay[h], rp.clause);
    }
  }
  Solution s = make_solution(g.instance, "witness", std::move(edges));
  check_solution(g.instance, s);
  return s;
}

WitnessBreakdown witness_breakdown(const GadgetInstance& g, const Solution& witness) {
  WitnessBreakdown b;
  b.forced_cost = g.forced_cost;
  const double cut = 1.5 * g.epsilon;
  int short_edges = 0;
  double short_cost = 0;
  for (const Edge& e : witness.edges) {
    double w = edge_length(g.instance, e);
    if (w <= cut) {
      ++short_edges;
      short_cost += w;
    } else {
      b.switch_cost += w;
    }
  }
  b.epsilon_edges = short_edges - static_cast<int>(g.forced.size());
  b.epsilon_cost = short_cost - g.forced_cost;
  const double s2 = std::sqrt(2.0);
  b.expected_switch_cost =
      g.r * (2.0 + 2.0 * s2) + g.r * g.delta * (2.0 + 2.0 * s2) + g.m_clauses * g.delta * s2;
  return b;
}

}  // namespace mcsg
