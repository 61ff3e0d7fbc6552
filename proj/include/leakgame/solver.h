#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "leakgame/game.h"

namespace leakgame {

struct SolverConfig {
  double epsilon = 1e-3;
  long max_iterations = 50000;
  double step_scale = 0.1;  // step size step_scale / sqrt(k)
  std::uint64_t seed = 0;   // reserved for randomized tie perturbation; unused

  void validate() const;
};

struct EquilibriumResult {
  MixedStrategy delta_star;
  double value = 0.0;  // f(delta_star)
  long iterations_used = 0;
  std::vector<double> certificate;  // V_hat[pi, C_{delta_star a}] per a
  double gap_bound = 0.0;           // a-posteriori bound on f(delta_star) - f*

  bool converged(double epsilon) const { return gap_bound <= epsilon; }
};

struct TraceRow {
  long k = 0;
  double f = 0.0;
  double f_best = 0.0;
  double step = 0.0;
};

using SubgradientTrace = std::vector<TraceRow>;

// Euclidean projection onto the probability simplex (sort and threshold).
MixedStrategy project_simplex(std::span<const double> v);

// Exact subgradient of f at delta for Bayes games:
//   g_d = sum_y pi(x*_y) C_{d a*}(x*_y, y)
// with a* the best response and x*_y maximizing pi(x) C_{delta a*}(x, y),
// both tie-broken on the lowest index.
std::vector<double> bayes_subgradient(const LeakageGame& game,
                                      const MixedStrategy& delta);

// Forward differences of f along the feasible directions e_d - delta,
// re-centred to sum to zero. Works for any measure.
std::vector<double> generic_subgradient(const LeakageGame& game,
                                        const MixedStrategy& delta,
                                        double h = 1e-6);

// Projected subgradient descent on f from the uniform strategy. Returns the
// best iterate. Stops once the bound (R^2 + G^2 sum a_i^2) / (2 sum a_i),
// R = sqrt(2), drops to epsilon, when a zero tangent subgradient certifies
// optimality, or after max_iterations.
EquilibriumResult solve_minimax(const LeakageGame& game,
                                const SolverConfig& config = {},
                                SubgradientTrace* trace = nullptr);

// Exact equilibrium for Bayes games through the linear program
//   min t  s.t.  z_ay >= sum_d delta(d) pi(x) C_da(x,y)  for all a, y, x
//                sum_y z_ay <= t                          for all a
//                delta in the simplex.
EquilibriumResult solve_lp_bayes(const LeakageGame& game);

}  // namespace leakgame
