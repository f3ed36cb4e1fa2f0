#pragma once

#include <vector>

#include "gsec/rational.hpp"

namespace gsec {

/// max c.x subject to A x <= b, x >= 0, with b >= 0 so the slack basis is
/// feasible. Dense exact tableau, Bland's rule.
struct LpProblem {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

struct LpResult {
  bool bounded = true;
  Rational value;
  std::vector<Rational> x;
  int pivots = 0;
};

/// Throws BadParams on shape mismatch or a negative right-hand side.
LpResult maximize(const LpProblem& lp);

}  // namespace gsec
