#pragma once

#include <vector>

namespace leakgame::lp {

enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Solution {
  Status status = Status::kInfeasible;
  double objective = 0.0;
  std::vector<double> x;
};

// maximize c.x  subject to  A x <= b,  x >= 0.
//
// Dense tableau simplex. An auxiliary variable drives an infeasible origin
// (some b_i < 0) to a feasible basis first. Entering variables follow the
// most-negative reduced cost, falling back to Bland's rule after a pivot
// budget so degenerate problems still terminate.
Solution maximize(const std::vector<std::vector<double>>& A,
                  const std::vector<double>& b, const std::vector<double>& c);

}  // namespace leakgame::lp
