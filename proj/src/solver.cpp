#include "leakgame/solver.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "leakgame/error.h"
#include "leakgame/lp.h"

namespace leakgame {

namespace {

// Upper bound on the distance from the uniform start to any optimum.
constexpr double kSimplexRadiusSquared = 2.0;

// Below this the tangent part of a subgradient is treated as zero.
constexpr double kStationaryNorm = 1e-14;

std::vector<double> bayes_subgradient_for(const LeakageGame& game,
                                          const MixedStrategy& delta,
                                          std::size_t a_star) {
  const Prior& prior = game.prior();
  const Channel mixed = mixed_channel(game, delta, a_star);
  std::vector<double> g(game.num_defender_actions(), 0.0);
  for (std::size_t y = 0; y < mixed.num_outputs(); ++y) {
    std::size_t x_star = 0;
    double best = prior[0] * mixed(0, y);
    for (std::size_t x = 1; x < mixed.num_inputs(); ++x) {
      const double v = prior[x] * mixed(x, y);
      if (v > best) {
        best = v;
        x_star = x;
      }
    }
    for (std::size_t d = 0; d < g.size(); ++d) {
      g[d] += prior[x_star] * game.channel(d, a_star)(x_star, y);
    }
  }
  return g;
}

void center(std::vector<double>& g) {
  const double mean = std::accumulate(g.begin(), g.end(), 0.0) / g.size();
  for (double& v : g) v -= mean;
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double e : v) s += e * e;
  return std::sqrt(s);
}

EquilibriumResult make_result(const LeakageGame& game, MixedStrategy delta,
                              long iterations, double gap_bound) {
  auto certificate = attacker_values(game, delta);
  const double value = *std::max_element(certificate.begin(), certificate.end());
  return EquilibriumResult{std::move(delta), value, iterations,
                           std::move(certificate), gap_bound};
}

}  // namespace

void SolverConfig::validate() const {
  if (!(epsilon > 0.0)) throw InputError("solver: epsilon must be positive");
  if (max_iterations < 1) throw InputError("solver: max_iterations must be >= 1");
  if (!(step_scale > 0.0)) throw InputError("solver: step_scale must be positive");
}

MixedStrategy project_simplex(std::span<const double> v) {
  if (v.empty()) throw InputError("project_simplex: empty vector");
  for (double e : v) {
    if (!std::isfinite(e)) throw InputError("project_simplex: non-finite entry");
  }
  std::vector<double> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    cumulative += sorted[j];
    const double candidate = (cumulative - 1.0) / static_cast<double>(j + 1);
    if (sorted[j] - candidate > 0.0) theta = candidate;
  }

  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::max(v[i] - theta, 0.0);
  return MixedStrategy(std::move(out));
}

std::vector<double> bayes_subgradient(const LeakageGame& game,
                                      const MixedStrategy& delta) {
  if (!game.measure().is_bayes()) {
    throw InputError("bayes_subgradient: game measure is not Bayes vulnerability");
  }
  const BestResponse br = attacker_best_response(game, delta);
  return bayes_subgradient_for(game, delta, br.action);
}

std::vector<double> generic_subgradient(const LeakageGame& game,
                                        const MixedStrategy& delta, double h) {
  if (!(h > 0.0) || h >= 1.0) {
    throw InputError("generic_subgradient: step must lie in (0, 1)");
  }
  const std::size_t n = game.num_defender_actions();
  const double f0 = best_response_value(game, delta);
  std::vector<double> g(n);
  for (std::size_t d = 0; d < n; ++d) {
    std::vector<double> moved(n);
    for (std::size_t i = 0; i < n; ++i) moved[i] = (1.0 - h) * delta[i];
    moved[d] += h;
    g[d] = (best_response_value(game, MixedStrategy(std::move(moved))) - f0) / h;
  }
  center(g);
  return g;
}

EquilibriumResult solve_minimax(const LeakageGame& game, const SolverConfig& config,
                                SubgradientTrace* trace) {
  config.validate();
  const std::size_t n = game.num_defender_actions();
  if (n == 1) return make_result(game, MixedStrategy::point(1, 0), 0, 0.0);

  const bool bayes = game.measure().is_bayes();
  MixedStrategy delta = MixedStrategy::uniform(n);
  MixedStrategy best = delta;
  double f_best = std::numeric_limits<double>::infinity();
  double lipschitz = 0.0;
  double step_sum = 0.0;
  double step_sq_sum = 0.0;
  double bound = std::numeric_limits<double>::infinity();
  long k = 1;

  for (; k <= config.max_iterations; ++k) {
    const BestResponse br = attacker_best_response(game, delta);
    if (br.value < f_best) {
      f_best = br.value;
      best = delta;
    }
    std::vector<double> g = bayes ? bayes_subgradient_for(game, delta, br.action)
                                  : generic_subgradient(game, delta);
    center(g);
    const double g_norm = norm2(g);
    const double step = config.step_scale / std::sqrt(static_cast<double>(k));
    lipschitz = std::max(lipschitz, g_norm);
    step_sum += step;
    step_sq_sum += step * step;
    bound = (kSimplexRadiusSquared + lipschitz * lipschitz * step_sq_sum) /
            (2.0 * step_sum);

    const bool stationary = g_norm < kStationaryNorm;
    if (stationary) {
      // 0 is a subgradient of f restricted to the simplex: delta is optimal.
      best = delta;
      f_best = br.value;
      bound = 0.0;
    }
    if (trace != nullptr) trace->push_back({k, br.value, f_best, step});
    if (stationary || bound <= config.epsilon) break;

    std::vector<double> next(n);
    for (std::size_t d = 0; d < n; ++d) next[d] = delta[d] - step * g[d];
    delta = project_simplex(next);
  }
  const long used = std::min(k, config.max_iterations);
  return make_result(game, std::move(best), used, bound);
}

EquilibriumResult solve_lp_bayes(const LeakageGame& game) {
  if (!game.measure().is_bayes()) {
    throw InputError("solve_lp_bayes: game measure is not Bayes vulnerability");
  }
  const std::size_t nd = game.num_defender_actions();
  const std::size_t na = game.num_attacker_actions();
  const Prior& prior = game.prior();

  // Variable layout: delta (nd), t, then z_ay for every a and output y of a.
  const std::size_t t_index = nd;
  std::vector<std::size_t> z_offset(na);
  std::size_t num_vars = nd + 1;
  for (std::size_t a = 0; a < na; ++a) {
    z_offset[a] = num_vars;
    num_vars += game.channel(0, a).num_outputs();
  }

  std::vector<std::vector<double>> A;
  std::vector<double> b;
  for (std::size_t a = 0; a < na; ++a) {
    const std::size_t ny = game.channel(0, a).num_outputs();
    for (std::size_t y = 0; y < ny; ++y) {
      for (std::size_t x = 0; x < prior.size(); ++x) {
        std::vector<double> row(num_vars, 0.0);
        bool any = false;
        for (std::size_t d = 0; d < nd; ++d) {
          row[d] = prior[x] * game.channel(d, a)(x, y);
          any = any || row[d] != 0.0;
        }
        if (!any) continue;  // implied by z >= 0
        row[z_offset[a] + y] = -1.0;
        A.push_back(std::move(row));
        b.push_back(0.0);
      }
    }
    std::vector<double> row(num_vars, 0.0);
    for (std::size_t y = 0; y < ny; ++y) row[z_offset[a] + y] = 1.0;
    row[t_index] = -1.0;
    A.push_back(std::move(row));
    b.push_back(0.0);
  }
  std::vector<double> sum_row(num_vars, 0.0);
  std::fill(sum_row.begin(), sum_row.begin() + nd, 1.0);
  A.push_back(sum_row);
  b.push_back(1.0);
  for (double& v : sum_row) v = -v;
  A.push_back(sum_row);
  b.push_back(-1.0);

  std::vector<double> objective(num_vars, 0.0);
  objective[t_index] = -1.0;

  const lp::Solution sol = lp::maximize(A, b, objective);
  if (sol.status != lp::Status::kOptimal) {
    throw NumericalError("solve_lp_bayes: simplex did not reach an optimum");
  }

  std::vector<double> delta(sol.x.begin(), sol.x.begin() + nd);
  double total = 0.0;
  for (double& v : delta) {
    v = std::max(v, 0.0);
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-6) {
    throw NumericalError("solve_lp_bayes: solution left the simplex");
  }
  for (double& v : delta) v /= total;
  return make_result(game, MixedStrategy(std::move(delta)), 0, 0.0);
}

}  // namespace leakgame
