#include "mcsg/dispatch.hpp"

#include "mcsg/core.hpp"
#include "mcsg/exact2.hpp"

namespace mcsg {

SolveMode parse_solve_mode(const std::string& name) {
  if (name == "auto") return SolveMode::Auto;
  if (name == "exact2") return SolveMode::Exact2;
  if (name == "a1") return SolveMode::A1;
  if (name == "a2") return SolveMode::A2;
  if (name == "dp") return SolveMode::Dp;
  if (name == "oracle") return SolveMode::Oracle;
  if (name == "pairing") return SolveMode::Pairing;
  throw InputError("unknown mode: " + name);
}

Solution solve_dispatch(const Instance& inst, SolveMode mode, const DispatchOptions& opts) {
  validate_instance(inst);
  if (mode == SolveMode::Auto) {
    if (inst.k <= 2)
      mode = SolveMode::Exact2;
    else if (!collinear_order(inst).empty())
      mode = SolveMode::Dp;
    else if (inst.k == 3)
      mode = SolveMode::A2;
    else
      mode = SolveMode::Pairing;
  }
  switch (mode) {
    case SolveMode::Exact2:
      if (inst.k > 2) throw InputError("exact2 needs k <= 2; use the exact2 command with --pair");
      return solve_exact2(inst, opts.approx.m_limit);
    case SolveMode::A1:
      return approx_a1(inst, opts.approx);
    case SolveMode::A2:
      return approx_a2(inst, opts.approx);
    case SolveMode::Dp:
      if (collinear_order(inst).empty()) throw InputError("dp needs collinear points");
      return dp_solve(inst, opts.dp);
    case SolveMode::Oracle:
      return brute_force(inst, opts.oracle);
    case SolveMode::Pairing:
      return approx_pairing(inst, default_pairing(inst.k), opts.approx);
    case SolveMode::Auto:
      break;
  }
  throw InputError("unsupported mode");
}

}  // namespace mcsg
