#pragma once

#include <string>

#include "mcsg/approx3.hpp"
#include "mcsg/collinear.hpp"
#include "mcsg/oracle.hpp"
#include "mcsg/types.hpp"

namespace mcsg {

enum class SolveMode { Auto, Exact2, A1, A2, Dp, Oracle, Pairing };

SolveMode parse_solve_mode(const std::string& name);

struct DispatchOptions {
  ApproxConfig approx;
  DpOptions dp;
  OracleBudget oracle;
};

// auto: k <= 2 -> exact2, collinear -> dp, k = 3 -> a2, otherwise pairing.
Solution solve_dispatch(const Instance& inst, SolveMode mode, const DispatchOptions& opts = {});

}  // namespace mcsg
