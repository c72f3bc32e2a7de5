#pragma once

#include <vector>

#include "tlg/arith.hpp"

namespace tlg {

enum class Relation { LessEqual, GreaterEqual, Equal };

enum class LPStatus { Optimal, Infeasible, Unbounded };

/// Optimize c.x over {x : rows, x_k >= 0 where requested}. Exact rational
/// two-phase simplex with Bland's rule.
struct LinearProgram {
  struct Row {
    RatVector coeffs;
    Relation rel;
    Rat rhs;
  };

  std::size_t num_vars = 0;
  std::vector<bool> nonnegative;  // empty means all variables free
  RatVector objective;            // empty means pure feasibility
  bool maximize = false;
  std::vector<Row> rows;

  explicit LinearProgram(std::size_t n) : num_vars(n) {}

  void add(RatVector coeffs, Relation rel, Rat rhs) {
    rows.push_back({std::move(coeffs), rel, std::move(rhs)});
  }
};

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rat value = 0;
  RatVector x;

  bool optimal() const { return status == LPStatus::Optimal; }
};

LPResult solve_lp(const LinearProgram& lp);

}  // namespace tlg
