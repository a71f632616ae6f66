#include "mcsg/core.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "mcsg/dsu.hpp"

namespace mcsg {

using nlohmann::json;

std::string ColorSet::str() const {
  std::string s = "{";
  bool first = true;
  for (int c : colors()) {
    if (!first) s += ",";
    s += std::to_string(c);
    first = false;
  }
  return s + "}";
}

std::vector<int> Instance::color_class(int c) const {
  std::vector<int> out;
  for (int i = 0; i < n(); ++i)
    if (points[i].colors.contains(c)) out.push_back(i);
  return out;
}

bool costs_equal(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

bool cost_leq(double a, double b, double tol) {
  return a <= b + tol * std::max({1.0, std::abs(a), std::abs(b)});
}

double dist(const Point& p, const Point& q) { return std::hypot(p.x - q.x, p.y - q.y); }

double edge_length(const Instance& inst, const Edge& e) { return dist(inst.points[e.a], inst.points[e.b]); }

ColorSet edge_color(const Instance& inst, const Edge& e) {
  if (e.a < 0 || e.b >= inst.n() || e.a == e.b) throw InputError("edge index out of range");
  return inst.points[e.a].colors & inst.points[e.b].colors;
}

bool is_csg(const Instance& inst, const EdgeSet& edges) {
  const int n = inst.n();
  for (int c = 1; c <= inst.k; ++c) {
    Dsu dsu(n);
    for (const Edge& e : edges)
      if (edge_color(inst, e).contains(c)) dsu.unite(e.a, e.b);
    int root = -1;
    for (int i = 0; i < n; ++i) {
      if (!inst.points[i].colors.contains(c)) continue;
      int r = dsu.find(i);
      if (root < 0) root = r;
      else if (r != root) return false;
    }
  }
  return true;
}

double solution_cost(const Instance& inst, const EdgeSet& edges) {
  double s = 0;
  for (const Edge& e : edges) s += edge_length(inst, e);
  return s;
}

EdgeSet canonical(EdgeSet edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

Solution make_solution(const Instance& inst, std::string algorithm, EdgeSet edges,
                       std::optional<double> ratio_bound) {
  Solution s;
  s.algorithm = std::move(algorithm);
  s.edges = canonical(std::move(edges));
  s.cost = solution_cost(inst, s.edges);
  s.ratio_bound = ratio_bound;
  return s;
}

void check_solution(const Instance& inst, const Solution& sol) {
  for (const Edge& e : sol.edges)
    if (e.a < 0 || e.b >= inst.n() || e.a >= e.b) throw InvariantViolation("edge index out of range");
  EdgeSet sorted = canonical(sol.edges);
  if (sorted.size() != sol.edges.size()) throw InvariantViolation("duplicate edges in solution");
  double c = solution_cost(inst, sol.edges);
  if (!costs_equal(c, sol.cost)) throw InvariantViolation("reported cost differs from edge lengths");
  if (!is_csg(inst, sol.edges)) throw InvariantViolation("solution is not a colored spanning graph");
}

void validate_instance(const Instance& inst) {
  if (inst.k < 1 || inst.k > kMaxColors) throw InputError("k must be in 1.." + std::to_string(kMaxColors));
  if (inst.points.empty()) throw InputError("instance has no points");
  const ColorSet all = ColorSet::all(inst.k);
  std::vector<std::pair<double, double>> xy;
  xy.reserve(inst.points.size());
  for (const Point& p : inst.points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw InputError("non-finite coordinate");
    if (p.colors.empty()) throw InputError("empty color set on a point");
    if (!p.colors.subset_of(all)) throw InputError("color out of range");
    xy.emplace_back(p.x, p.y);
  }
  std::sort(xy.begin(), xy.end());
  if (std::adjacent_find(xy.begin(), xy.end()) != xy.end()) throw InputError("coincident points");
}

namespace {

Instance instance_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("k") || !doc.contains("points"))
    throw InputError("malformed instance: expected object with k and points");
  if (!doc["k"].is_number_integer()) throw InputError("malformed instance: k must be an integer");
  Instance inst;
  inst.k = doc["k"].get<int>();
  if (inst.k < 1) throw InputError("k must be >= 1");
  if (inst.k > kMaxColors) throw InputError("k must be <= 16");
  if (!doc["points"].is_array()) throw InputError("malformed instance: points must be an array");
  for (const json& jp : doc["points"]) {
    if (!jp.is_object() || !jp.contains("x") || !jp.contains("y") || !jp.contains("colors"))
      throw InputError("malformed point");
    if (!jp["x"].is_number() || !jp["y"].is_number() || !jp["colors"].is_array())
      throw InputError("malformed point");
    Point p;
    p.x = jp["x"].get<double>();
    p.y = jp["y"].get<double>();
    for (const json& jc : jp["colors"]) {
      if (!jc.is_number_integer()) throw InputError("malformed color");
      int c = jc.get<int>();
      if (c < 1 || c > inst.k) throw InputError("color out of range: " + std::to_string(c));
      p.colors.add(c);
    }
    if (p.colors.empty()) throw InputError("empty color set on a point");
    inst.points.push_back(p);
  }
  validate_instance(inst);
  return inst;
}

json parse_json(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
}

}  // namespace

Instance load_instance(std::istream& in) { return instance_from_json(parse_json(in)); }

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return load_instance(in);
}

std::string instance_to_json(const Instance& inst) {
  json doc;
  doc["k"] = inst.k;
  json pts = json::array();
  for (const Point& p : inst.points) pts.push_back({{"x", p.x}, {"y", p.y}, {"colors", p.colors.colors()}});
  doc["points"] = std::move(pts);
  return doc.dump();
}

void save_instance(std::ostream& out, const Instance& inst) { out << instance_to_json(inst) << '\n'; }

std::string solution_to_json(const Solution& sol) {
  json doc;
  doc["algorithm"] = sol.algorithm;
  doc["cost"] = sol.cost;
  json edges = json::array();
  for (const Edge& e : sol.edges) edges.push_back({e.a, e.b});
  doc["edges"] = std::move(edges);
  doc["ratio_bound"] = sol.ratio_bound ? json(*sol.ratio_bound) : json(nullptr);
  return doc.dump();
}

Solution load_solution(std::istream& in) {
  json doc = parse_json(in);
  if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array())
    throw InputError("malformed solution");
  Solution s;
  s.algorithm = doc.value("algorithm", std::string());
  for (const json& je : doc["edges"]) {
    if (!je.is_array() || je.size() != 2 || !je[0].is_number_integer() || !je[1].is_number_integer())
      throw InputError("malformed edge");
    int a = je[0].get<int>(), b = je[1].get<int>();
    if (a == b || a < 0 || b < 0) throw InputError("malformed edge");
    s.edges.emplace_back(a, b);
  }
  s.cost = doc.contains("cost") && doc["cost"].is_number() ? doc["cost"].get<double>() : 0.0;
  if (doc.contains("ratio_bound") && doc["ratio_bound"].is_number()) s.ratio_bound = doc["ratio_bound"].get<double>();
  return s;
}

Solution load_solution_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return load_solution(in);
}

namespace {

double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

int uniform_int(std::mt19937_64& rng, int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); }

void check_params(int n, int k, double frac) {
  if (n < 1) throw InputError("n must be >= 1");
  if (k < 1 || k > kMaxColors) throw InputError("k must be in 1..16");
  if (!(frac >= 0.0 && frac <= 1.0)) throw InputError("multichromatic fraction must be in [0,1]");
  if (k == 1 && static_cast<int>(std::floor(frac * n)) > 0)
    throw InputError("k = 1 admits no multichromatic points");
}

std::vector<ColorSet> random_colors(int n, int k, double frac, std::mt19937_64& rng) {
  const int multi = static_cast<int>(std::floor(frac * n));
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[uniform_int(rng, i + 1)]);
  std::vector<bool> is_multi(n, false);
  for (int i = 0; i < multi; ++i) is_multi[order[i]] = true;

  std::vector<ColorSet> cs(n);
  const std::uint32_t full = (1u << k) - 1u;
  for (int i = 0; i < n; ++i) {
    if (is_multi[i]) {
      std::uint32_t m;
      do m = 1u + static_cast<std::uint32_t>(uniform_int(rng, static_cast<int>(full)));
      while (std::popcount(m) < 2);
      cs[i] = ColorSet::from_bits(m);
    } else {
      cs[i] = ColorSet::from_bits(1u << uniform_int(rng, k));
    }
  }
  if (n < k) return cs;
  // Cover every color: extend a multichromatic point, else recolor a
  // monochromatic point whose color is used more than once.
  for (int c = 1; c <= k; ++c) {
    std::vector<int> count(k + 1, 0);
    for (const ColorSet& s : cs)
      for (int d : s.colors()) ++count[d];
    if (count[c] > 0) continue;
    bool fixed = false;
    for (int i = 0; i < n && !fixed; ++i) {
      if (is_multi[i]) {
        cs[i].add(c);
        fixed = true;
      }
    }
    for (int i = 0; i < n && !fixed; ++i) {
      int d = cs[i].colors().front();
      if (!is_multi[i] && count[d] > 1) {
        cs[i] = ColorSet::of({c});
        fixed = true;
      }
    }
  }
  return cs;
}

}  // namespace

Instance generate_random(int n, int k, double frac, std::uint64_t seed) {
  check_params(n, k, frac);
  std::mt19937_64 rng(seed);
  Instance inst;
  inst.k = k;
  std::vector<std::pair<double, double>> used;
  for (int i = 0; i < n; ++i) {
    double x, y;
    do {
      x = unit_double(rng);
      y = unit_double(rng);
    } while (std::find(used.begin(), used.end(), std::make_pair(x, y)) != used.end());
    used.emplace_back(x, y);
    inst.points.push_back({x, y, {}});
  }
  auto cs = random_colors(n, k, frac, rng);
  for (int i = 0; i < n; ++i) inst.points[i].colors = cs[i];
  return inst;
}

Instance generate_collinear(int n, int k, double frac, std::uint64_t seed) {
  check_params(n, k, frac);
  std::mt19937_64 rng(seed);
  std::vector<double> xs;
  while (static_cast<int>(xs.size()) < n) {
    double x = unit_double(rng);
    if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  Instance inst;
  inst.k = k;
  for (double x : xs) inst.points.push_back({x, 0.0, {}});
  auto cs = random_colors(n, k, frac, rng);
  for (int i = 0; i < n; ++i) inst.points[i].colors = cs[i];
  return inst;
}

std::vector<int> collinear_order(const Instance& inst) {
  const int n = inst.n();
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  if (n <= 1) return order;
  const Point& p0 = inst.points[0];
  int j = 1;
  while (j < n && inst.points[j].x == p0.x && inst.points[j].y == p0.y) ++j;
  if (j == n) return order;
  double dx = inst.points[j].x - p0.x, dy = inst.points[j].y - p0.y;
  double len = std::hypot(dx, dy);
  double extent = 1.0;
  for (const Point& p : inst.points) extent = std::max({extent, std::abs(p.x - p0.x), std::abs(p.y - p0.y)});
  std::vector<double> t(n);
  for (int i = 0; i < n; ++i) {
    double qx = inst.points[i].x - p0.x, qy = inst.points[i].y - p0.y;
    if (std::abs(dx * qy - dy * qx) / len > 1e-9 * extent) return {};
    t[i] = (dx * qx + dy * qy) / len;
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) { return std::tie(t[a], a) < std::tie(t[b], b); });
  const Point &first = inst.points[order.front()], &last = inst.points[order.back()];
  if (std::tie(last.x, last.y) < std::tie(first.x, first.y)) std::reverse(order.begin(), order.end());
  return order;
}

}  // namespace mcsg
