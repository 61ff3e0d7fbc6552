#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "leakgame/game.h"

namespace leakgame {

// Brute-force verification routines. They evaluate f directly through the
// game module; only the saddle check consults the LP, as an exact reference
// value for Bayes games.

struct Maximin {
  MixedStrategy best_alpha;
  double value = 0.0;  // max_alpha min_{delta on grid} V(delta, alpha)
};

struct GridResult {
  MixedStrategy best_delta;
  double best_value = 0.0;  // f(best_delta)
  double resolution = 0.0;  // 1 / parts actually used
  // Bound on f(nearest grid point) - f(delta*) per unit of resolution:
  // L * |D| / 2, where L = max_a sum_y max_{x,d} pi(x) C_da(x,y) is a
  // Lipschitz constant of f in the l1 norm and |D| r / 2 bounds the l1
  // distance from any strategy to its best grid rounding.
  double lipschitz_estimate = 0.0;
  std::optional<Maximin> attacker_maximin;
};

inline constexpr std::size_t kMaxGridDefenderActions = 4;
inline constexpr std::size_t kMaxGridAttackerActions = 3;

// Enumerates every delta whose entries are multiples of `resolution` and
// returns the minimizer of f (first in lexicographic order on ties). With
// `with_maximin`, also enumerates the attacker's grid (|A| <= 3).
GridResult grid_minimax(const LeakageGame& game, double resolution,
                        bool with_maximin = false);

// All compositions of `parts` into `size` non-negative integers, in
// lexicographic order.
std::vector<std::vector<int>> simplex_grid(std::size_t size, int parts);

struct SaddleReport {
  bool pass = false;
  double f_hat = 0.0;
  std::vector<double> certificate;  // V(delta_hat, point(a)) per a
  // Convex side: max over sampled delta and vertices of f(delta_hat) - f(delta) - eps.
  double worst_convex_violation = 0.0;
  std::vector<double> worst_delta;
  // Affine side: max over sampled alpha of V(delta_hat, alpha) - f(delta_hat).
  double worst_affine_violation = 0.0;
  // Bayes games only: f(delta_hat) - LP value - eps.
  std::optional<double> lp_value;
  std::optional<double> lp_violation;
  double worst_violation = 0.0;  // max of the violations above (pass iff <= 0)
};

inline constexpr int kDefaultSaddleSamples = 1000;

// Checks the epsilon-saddle inequalities at delta_hat:
//   - affine side: V(delta_hat, alpha) <= max_a V(delta_hat, point(a)) for
//     random alpha, and for Bayes games f(delta_hat) <= LP value + eps;
//   - convex side: f(delta) >= f(delta_hat) - eps for `samples` random delta
//     and every vertex.
SaddleReport verify_epsilon_saddle(const LeakageGame& game,
                                   const MixedStrategy& delta_hat, double epsilon,
                                   int samples = kDefaultSaddleSamples,
                                   std::uint64_t seed = 1);

struct ConvexityReport {
  double lhs = 0.0;  // V_hat[pi, sum_i mu(i) C_i]
  double rhs = 0.0;  // sum_i mu(i) V_hat[pi, C_i]
  bool pass = false;
};

// Convexity of posterior vulnerability under convex combination of channels.
// Channels are padded to a common output set first.
ConvexityReport check_convexity_theorem(const Prior& prior,
                                        const VulnerabilityMeasure& measure,
                                        std::span<const Channel> channels,
                                        std::span<const double> mu);

}  // namespace leakgame
