#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mcsg/approx3.hpp"
#include "mcsg/collinear.hpp"
#include "mcsg/core.hpp"
#include "mcsg/dispatch.hpp"
#include "mcsg/exact2.hpp"
#include "mcsg/gadgets.hpp"
#include "mcsg/mst.hpp"
#include "mcsg/oracle.hpp"
#include "mcsg/render.hpp"

using namespace mcsg;

namespace {

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

// Every solution is validated before it leaves the process.
void emit_solution(const Instance& inst, const Solution& sol, const std::string& out, const std::string& svg) {
  check_solution(inst, sol);
  write_text(out, solution_to_json(sol) + "\n");
  if (!svg.empty()) write_text(svg, render_svg(inst, &sol));
}

std::vector<std::vector<int>> load_groups(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  nlohmann::json doc;
  try {
    f >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed groups file: ") + e.what());
  }
  if (!doc.is_array()) throw InputError("groups file must be an array of index arrays");
  std::vector<std::vector<int>> groups;
  for (const auto& g : doc) {
    if (!g.is_array()) throw InputError("groups file must be an array of index arrays");
    std::vector<int> blk;
    for (const auto& v : g) {
      if (!v.is_number_integer()) throw InputError("group entries must be integers");
      blk.push_back(v.get<int>());
    }
    groups.push_back(blk);
  }
  return groups;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum colored spanning graph solvers"};
  app.require_subcommand(1);

  std::string input, output, svg, mode = "auto", algorithm = "a2", pair = "1,2", groups_file, solution_file;
  double rho = 1.21;
  int m_limit = kDefaultMLimit, k_guard = 6, max_edges = 22;
  double time_limit = 120.0;
  bool stats = false, star = false;

  auto* solve = app.add_subcommand("solve", "solve with an automatically chosen or named algorithm");
  solve->add_option("--input", input, "instance JSON")->required();
  solve->add_option("--output", output, "solution JSON (stdout if omitted)");
  solve->add_option("--svg", svg, "also render the solution");
  solve->add_option("--mode", mode, "auto|exact2|a1|a2|dp|oracle|pairing");
  solve->add_option("--rho", rho, "Steiner ratio bound");
  solve->add_option("--m-limit", m_limit, "bichromatic point limit of the exact 2-color solver");

  auto* exact2 = app.add_subcommand("exact2", "exact solver for a color pair");
  exact2->add_option("--input", input)->required();
  exact2->add_option("--output", output);
  exact2->add_option("--svg", svg);
  exact2->add_option("--pair", pair, "two colors, e.g. 1,2");
  exact2->add_option("--merge-groups", groups_file, "JSON array of pre-connected index groups");
  exact2->add_option("--m-limit", m_limit);

  auto* approx = app.add_subcommand("approx", "3-color approximation algorithms");
  approx->add_option("--input", input)->required();
  approx->add_option("--output", output);
  approx->add_option("--svg", svg);
  approx->add_option("--algorithm", algorithm, "a1|a2|pairing");
  approx->add_option("--rho", rho);
  approx->add_option("--m-limit", m_limit);

  auto* collinear = app.add_subcommand("collinear", "exact dynamic program for collinear points");
  collinear->add_option("--input", input)->required();
  collinear->add_option("--output", output);
  collinear->add_option("--svg", svg);
  collinear->add_option("--k-guard", k_guard);
  collinear->add_flag("--stats", stats, "print per-cut state counts to stderr");

  auto* oracle = app.add_subcommand("oracle", "exhaustive branch and bound");
  oracle->add_option("--input", input)->required();
  oracle->add_option("--output", output);
  oracle->add_option("--svg", svg);
  oracle->add_option("--max-edges", max_edges);
  oracle->add_option("--time-limit", time_limit, "seconds");
  oracle->add_flag("--star", star, "collinear input: star-property candidates only");

  auto* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);
  int n = 10, k = 3;
  double frac = 0.3;
  std::uint64_t seed = 1;
  std::string cnf_file, witness_file, witness_out;
  std::uint64_t max_points = 20'000'000;
  auto* gen_random = gen->add_subcommand("random", "uniform points in the unit square");
  auto* gen_collinear = gen->add_subcommand("collinear", "points on a line");
  for (auto* g : {gen_random, gen_collinear}) {
    g->add_option("--n", n);
    g->add_option("--k", k);
    g->add_option("--frac", frac, "multichromatic fraction");
    g->add_option("--seed", seed);
    g->add_option("--output,--out", output);
    g->add_option("--svg", svg);
  }
  auto* gen_gadget = gen->add_subcommand("gadget", "hardness construction from a monotone planar CNF");
  gen_gadget->add_option("--cnf", cnf_file)->required();
  gen_gadget->add_option("--out,--output", output);
  gen_gadget->add_option("--witness", witness_file, "signed literal assignment");
  gen_gadget->add_option("--witness-out", witness_out);
  gen_gadget->add_option("--max-points", max_points);

  auto* bench = app.add_subcommand("bench", "approximation ratios against the oracle");
  std::string family = "random", algos = "a1,a2", bench_out;
  int seeds = 200, n_min = 4, n_max = 6;
  bench->add_option("--family", family, "random|collinear|allblack");
  bench->add_option("--algos", algos, "comma list of a1,a2,exact2,dp,pairing");
  bench->add_option("--seeds", seeds);
  bench->add_option("--seed", seed, "first seed");
  bench->add_option("--n-min", n_min);
  bench->add_option("--n-max", n_max);
  bench->add_option("--k", k);
  bench->add_option("--frac", frac);
  bench->add_option("--max-edges", max_edges);
  bench->add_option("--out", bench_out, "CSV report (stdout if omitted)");

  auto* render = app.add_subcommand("render", "SVG drawing of an instance and optional solution");
  render->add_option("--input", input)->required();
  render->add_option("--solution", solution_file);
  render->add_option("--svg,--output", svg)->required();

  auto* prune = app.add_subcommand("prune", "print forced edges per color");
  prune->add_option("--input", input)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    ApproxConfig cfg;
    cfg.steiner_ratio_bound = rho;
    cfg.m_limit = m_limit;
    cfg.validate();

    if (*solve) {
      Instance inst = load_instance_file(input);
      DispatchOptions opts;
      opts.approx = cfg;
      opts.oracle.max_candidate_edges = max_edges;
      emit_solution(inst, solve_dispatch(inst, parse_solve_mode(mode), opts), output, svg);
    } else if (*exact2) {
      Instance inst = load_instance_file(input);
      auto colors = split(pair, ',');
      if (colors.size() != 2) throw InputError("--pair needs two colors");
      PairProjection proj;
      proj.base = &inst;
      proj.c1 = std::stoi(colors[0]);
      proj.c2 = std::stoi(colors[1]);
      if (!groups_file.empty()) proj.group_merge = load_groups(groups_file);
      Solution sol = solve_pair(proj, m_limit);
      // A pair solution only spans the two chosen colors.
      if (inst.k <= 2) check_solution(inst, sol);
      write_text(output, solution_to_json(sol) + "\n");
      if (!svg.empty()) write_text(svg, render_svg(inst, &sol));
    } else if (*approx) {
      Instance inst = load_instance_file(input);
      Solution sol;
      if (algorithm == "a1")
        sol = approx_a1(inst, cfg);
      else if (algorithm == "a2")
        sol = approx_a2(inst, cfg);
      else if (algorithm == "pairing")
        sol = approx_pairing(inst, default_pairing(inst.k), cfg);
      else
        throw InputError("unknown algorithm: " + algorithm);
      emit_solution(inst, sol, output, svg);
    } else if (*collinear) {
      Instance inst = load_instance_file(input);
      DpOptions opts;
      opts.k_guard = k_guard;
      DpStats st;
      Solution sol = dp_solve(inst, opts, &st);
      if (stats) {
        std::fprintf(stderr, "cut,gamma_states,finite_entries,max_partition_vectors,max_ground\n");
        for (const CutStats& c : st.cuts)
          std::fprintf(stderr, "%d,%d,%llu,%llu,%d\n", c.cut, c.gamma_states,
                       static_cast<unsigned long long>(c.finite_entries),
                       static_cast<unsigned long long>(c.max_partition_vectors), c.max_ground);
      }
      emit_solution(inst, sol, output, svg);
    } else if (*oracle) {
      Instance inst = load_instance_file(input);
      OracleBudget budget{max_edges, time_limit};
      OracleOptions opts;
      opts.star_only = star;
      emit_solution(inst, brute_force(inst, budget, opts), output, svg);
    } else if (*gen_random || *gen_collinear) {
      Instance inst = *gen_random ? generate_random(n, k, frac, seed) : generate_collinear(n, k, frac, seed);
      write_text(output, instance_to_json(inst) + "\n");
      if (!svg.empty()) write_text(svg, render_svg(inst, nullptr));
    } else if (*gen_gadget) {
      MonotoneCnf cnf = load_cnf_file(cnf_file);
      GadgetOptions gopts;
      gopts.max_points = max_points;
      GadgetInstance g = build_gadget(cnf, gopts);
      write_text(output, instance_to_json(g.instance) + "\n");
      std::fprintf(stderr, "r=%d m=%d points=%d active=%zu epsilon=%.17g delta=%.17g W=%.17g\n", g.r, g.m_clauses,
                   g.instance.n(), g.active_points.size(), g.epsilon, g.delta, g.W);
      if (!witness_file.empty()) {
        std::ifstream f(witness_file);
        if (!f) throw InputError("cannot open " + witness_file);
        Solution w = build_witness(g, parse_assignment(f, cnf.num_vars));
        std::fprintf(stderr, "witness cost=%.17g\n", w.cost);
        emit_solution(g.instance, w, witness_out.empty() ? "-" : witness_out, "");
      }
    } else if (*bench) {
      BenchSpec spec;
      spec.family = family;
      spec.n_min = n_min;
      spec.n_max = n_max;
      spec.k = k;
      spec.multichromatic_fraction = frac;
      spec.first_seed = seed;
      OracleBudget budget;
      budget.max_candidate_edges = max_edges;
      BenchReport rep = ratio_bench(spec, split(algos, ','), seeds, budget);
      write_text(bench_out, bench_csv(rep));
      int violations = 0;
      for (const BenchSummary& s : rep.summaries) {
        std::fprintf(stderr, "%s: count=%d max_ratio=%.6f mean_ratio=%.6f bound=%.6f violations=%d\n", s.algo.c_str(),
                     s.count, s.max_ratio, s.mean_ratio, s.bound, s.violations);
        violations += s.violations;
      }
      for (const std::string& f : rep.failures) std::fprintf(stderr, "failure: %s\n", f.c_str());
      if (violations > 0) return 3;
    } else if (*render) {
      Instance inst = load_instance_file(input);
      if (solution_file.empty()) {
        write_text(svg, render_svg(inst, nullptr));
      } else {
        Solution sol = load_solution_file(solution_file);
        for (const Edge& e : sol.edges)
          if (e.b >= inst.n()) throw InputError("solution edge out of range");
        write_text(svg, render_svg(inst, &sol));
      }
    } else if (*prune) {
      Instance inst = load_instance_file(input);
      for (int c = 1; c <= inst.k; ++c) {
        ColorForest f = forced_edges(inst, c);
        std::printf("color %d: components=%d edges=", c, f.num_components);
        for (size_t i = 0; i < f.edges.size(); ++i)
          std::printf("%s(%d,%d)", i ? " " : "", f.edges[i].a, f.edges[i].b);
        std::printf("\n");
      }
    }
  } catch (const InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const Refusal& e) {
    std::fprintf(stderr, "refused: %s\n", e.what());
    return 2;
  } catch (const InvariantViolation& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: bad number: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 3;
  }
  return 0;
}
