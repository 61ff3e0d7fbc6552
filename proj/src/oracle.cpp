#include "leakgame/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "leakgame/error.h"
#include "leakgame/sampling.h"
#include "leakgame/solver.h"

namespace leakgame {

namespace {

void compositions(std::size_t size, int remaining, std::vector<int>& prefix,
                  std::vector<std::vector<int>>& out) {
  if (prefix.size() + 1 == size) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    prefix.push_back(v);
    compositions(size, remaining - v, prefix, out);
    prefix.pop_back();
  }
}

std::vector<double> to_distribution(const std::vector<int>& composition, int parts) {
  std::vector<double> p(composition.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = static_cast<double>(composition[i]) / parts;
  }
  return p;
}

double l1_lipschitz(const LeakageGame& game) {
  const Prior& prior = game.prior();
  double worst = 0.0;
  for (std::size_t a = 0; a < game.num_attacker_actions(); ++a) {
    double total = 0.0;
    for (std::size_t y = 0; y < game.channel(0, a).num_outputs(); ++y) {
      double column = 0.0;
      for (std::size_t d = 0; d < game.num_defender_actions(); ++d) {
        for (std::size_t x = 0; x < prior.size(); ++x) {
          column = std::max(column, prior[x] * game.channel(d, a)(x, y));
        }
      }
      total += column;
    }
    worst = std::max(worst, total);
  }
  return worst;
}

}  // namespace

std::vector<std::vector<int>> simplex_grid(std::size_t size, int parts) {
  std::vector<std::vector<int>> out;
  if (size == 0 || parts < 0) return out;
  std::vector<int> prefix;
  compositions(size, parts, prefix, out);
  return out;
}

GridResult grid_minimax(const LeakageGame& game, double resolution,
                        bool with_maximin) {
  const std::size_t nd = game.num_defender_actions();
  const std::size_t na = game.num_attacker_actions();
  if (nd > kMaxGridDefenderActions) {
    throw InputError("grid_minimax: at most " +
                     std::to_string(kMaxGridDefenderActions) +
                     " defender actions");
  }
  if (!(resolution > 0.0) || resolution > 0.1) {
    throw InputError("grid_minimax: resolution must lie in (0, 0.1]");
  }
  if (with_maximin && na > kMaxGridAttackerActions) {
    throw InputError("grid_minimax: maximin needs at most " +
                     std::to_string(kMaxGridAttackerActions) +
                     " attacker actions");
  }
  const int parts = static_cast<int>(std::lround(1.0 / resolution));

  const auto grid = simplex_grid(nd, parts);
  std::vector<std::vector<double>> values;
  if (with_maximin) values.reserve(grid.size());

  std::size_t best_index = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    auto v = attacker_values(game, MixedStrategy(to_distribution(grid[i], parts)));
    const double f = *std::max_element(v.begin(), v.end());
    if (f < best_value) {
      best_value = f;
      best_index = i;
    }
    if (with_maximin) values.push_back(std::move(v));
  }

  GridResult result{MixedStrategy(to_distribution(grid[best_index], parts)),
                    best_value, 1.0 / parts,
                    l1_lipschitz(game) * static_cast<double>(nd) / 2.0,
                    std::nullopt};

  if (with_maximin) {
    const auto alpha_grid = simplex_grid(na, parts);
    std::size_t best_alpha = 0;
    double maximin = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < alpha_grid.size(); ++j) {
      const auto alpha = to_distribution(alpha_grid[j], parts);
      double inner = std::numeric_limits<double>::infinity();
      for (const auto& v : values) {
        double u = 0.0;
        for (std::size_t a = 0; a < na; ++a) u += alpha[a] * v[a];
        inner = std::min(inner, u);
      }
      if (inner > maximin) {
        maximin = inner;
        best_alpha = j;
      }
    }
    result.attacker_maximin =
        Maximin{MixedStrategy(to_distribution(alpha_grid[best_alpha], parts)),
                maximin};
  }
  return result;
}

SaddleReport verify_epsilon_saddle(const LeakageGame& game,
                                   const MixedStrategy& delta_hat, double epsilon,
                                   int samples, std::uint64_t seed) {
  const std::size_t nd = game.num_defender_actions();
  const std::size_t na = game.num_attacker_actions();
  if (delta_hat.size() != nd) {
    throw InputError("verify: strategy has " + std::to_string(delta_hat.size()) +
                     " entries for " + std::to_string(nd) + " defender actions");
  }
  if (!(epsilon >= 0.0)) throw InputError("verify: epsilon must be non-negative");

  SaddleReport report;
  report.certificate = attacker_values(game, delta_hat);
  report.f_hat =
      *std::max_element(report.certificate.begin(), report.certificate.end());

  Rng rng(seed);

  report.worst_affine_violation = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const MixedStrategy alpha(uniform_simplex(na, rng));
    report.worst_affine_violation =
        std::max(report.worst_affine_violation,
                 mixed_utility(game, delta_hat, alpha) - report.f_hat);
  }
  if (samples <= 0) report.worst_affine_violation = 0.0;

  report.worst_convex_violation = -std::numeric_limits<double>::infinity();
  auto probe = [&](std::vector<double> delta) {
    const double violation =
        report.f_hat - best_response_value(game, MixedStrategy(delta)) - epsilon;
    if (violation > report.worst_convex_violation) {
      report.worst_convex_violation = violation;
      report.worst_delta = std::move(delta);
    }
  };
  for (std::size_t d = 0; d < nd; ++d) {
    std::vector<double> vertex(nd, 0.0);
    vertex[d] = 1.0;
    probe(std::move(vertex));
  }
  for (int i = 0; i < samples; ++i) probe(uniform_simplex(nd, rng));

  // Affinity makes the sampled alpha values exact convex combinations of the
  // certificate, so only rounding can push them above f_hat.
  constexpr double kAffineSlack = 1e-12;
  report.worst_violation = std::max(report.worst_convex_violation,
                                    report.worst_affine_violation - kAffineSlack);

  if (game.measure().is_bayes()) {
    report.lp_value = solve_lp_bayes(game).value;
    report.lp_violation = report.f_hat - *report.lp_value - epsilon;
    report.worst_violation = std::max(report.worst_violation, *report.lp_violation);
  }
  report.pass = report.worst_violation <= 0.0;
  return report;
}

ConvexityReport check_convexity_theorem(const Prior& prior,
                                        const VulnerabilityMeasure& measure,
                                        std::span<const Channel> channels,
                                        std::span<const double> mu) {
  if (channels.empty()) throw InputError("convexity check: no channels");
  const auto padded = pad_compatible(channels);
  ConvexityReport report;
  report.lhs = posterior_vulnerability(measure, prior, compose_convex(padded, mu));
  for (std::size_t i = 0; i < padded.size(); ++i) {
    report.rhs += mu[i] * posterior_vulnerability(measure, prior, padded[i]);
  }
  report.pass = report.lhs <= report.rhs + 1e-9;
  return report;
}

}  // namespace leakgame
