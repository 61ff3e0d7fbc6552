#include "leakgame/solver.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "leakgame/error.h"
#include "leakgame/examples.h"
#include "leakgame/oracle.h"
#include "leakgame/sampling.h"
#include "support/random_games.h"

namespace leakgame {
namespace {

using testing::random_bayes_game;

double f(const LeakageGame& game, const std::vector<double>& delta) {
  return best_response_value(game, MixedStrategy(delta));
}

std::vector<double> centred(std::vector<double> g) {
  const double mean = std::accumulate(g.begin(), g.end(), 0.0) / g.size();
  for (auto& v : g) v -= mean;
  return g;
}

// p = proj(v) iff p_i = max(v_i - tau, 0) for one threshold tau.
void expect_kkt(const std::vector<double>& v, const std::vector<double>& p) {
  double tau = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (p[i] > 0) {
      if (std::isnan(tau)) tau = v[i] - p[i];
      EXPECT_NEAR(v[i] - p[i], tau, 1e-12);
    }
  }
  ASSERT_FALSE(std::isnan(tau));
  for (std::size_t i = 0; i < v.size(); ++i) {
    EXPECT_GE(p[i], 0.0);
    if (p[i] == 0) EXPECT_LE(v[i], tau + 1e-12);
  }
  EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-12);
}

TEST(ProjectSimplexTest, KnownValues) {
  EXPECT_EQ(project_simplex(std::vector<double>{2, 0}).probs(), (std::vector<double>{1, 0}));
  const auto p = project_simplex(std::vector<double>{0.6, 0.6, 0.1}).probs();
  EXPECT_NEAR(p[0], 0.5, 1e-15);
  EXPECT_NEAR(p[1], 0.5, 1e-15);
  EXPECT_NEAR(p[2], 0.0, 1e-15);
  const auto q = project_simplex(std::vector<double>{0, 0, 0, 0}).probs();
  for (double v : q) EXPECT_DOUBLE_EQ(v, 0.25);
}

TEST(ProjectSimplexTest, RejectsBadInput) {
  EXPECT_THROW(project_simplex(std::vector<double>{}), InputError);
  EXPECT_THROW(project_simplex(std::vector<double>{0.5, std::nan("")}), InputError);
  EXPECT_THROW(project_simplex(std::vector<double>{1, INFINITY}), InputError);
}

TEST(ProjectSimplexTest, KktOnRandomVectors) {
  Rng rng(21);
  std::normal_distribution<double> normal(0.0, 2.0);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> v(2 + trial % 9);
    for (auto& x : v) x = normal(rng);
    expect_kkt(v, project_simplex(v).probs());
  }
}

TEST(ProjectSimplexTest, Idempotent) {
  Rng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = uniform_simplex(5, rng);
    const auto q = project_simplex(p).probs();
    for (std::size_t i = 0; i < p.size(); ++i) EXPECT_NEAR(p[i], q[i], 1e-15);
  }
}

TEST(ProjectSimplexTest, AgreesWithGridSearch) {
  Rng rng(23);
  std::normal_distribution<double> normal(0.0, 1.0);
  const int parts = 1000;
  for (std::size_t dim : {2u, 3u}) {
    const auto grid = simplex_grid(dim, parts);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> v(dim);
      for (auto& x : v) x = normal(rng);
      double best = INFINITY;
      std::vector<double> best_point;
      for (const auto& g : grid) {
        double d2 = 0;
        for (std::size_t i = 0; i < dim; ++i) {
          const double diff = v[i] - static_cast<double>(g[i]) / parts;
          d2 += diff * diff;
        }
        if (d2 < best) {
          best = d2;
          best_point.assign(g.begin(), g.end());
          for (auto& x : best_point) x /= parts;
        }
      }
      const auto p = project_simplex(v).probs();
      for (std::size_t i = 0; i < dim; ++i) EXPECT_NEAR(p[i], best_point[i], 2e-3);
    }
  }
}

TEST(SubgradientTest, HandComputedValues) {
  const auto tm = bayes_subgradient(examples::two_millionaires(), MixedStrategy::point(2, 0));
  EXPECT_EQ(tm, (std::vector<double>{1.0, 0.5}));
  const auto bs = bayes_subgradient(examples::binary_sum(), MixedStrategy::point(2, 0));
  EXPECT_EQ(bs, (std::vector<double>{1.0, 0.0}));
}

TEST(SubgradientTest, RejectsNonBayesGames) {
  const auto id = examples::independence_channels(0.1).identity;
  const auto game = testing::single_profile_game(
      id, VulnerabilityMeasure::gain({"0", "1"}, {{1, 0}, {0, 1}}));
  EXPECT_THROW(bayes_subgradient(game, MixedStrategy::point(1, 0)), InputError);
}

TEST(SubgradientTest, SubgradientInequalityHolds) {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto game = random_bayes_game(2 + trial % 4, 1 + trial % 3, 3, 3, rng);
    const std::size_t nd = game.defender_actions().size();
    const auto delta = uniform_simplex(nd, rng);
    const auto g = bayes_subgradient(game, MixedStrategy(delta));
    const double f0 = f(game, delta);
    for (int k = 0; k < 4; ++k) {
      const auto other = uniform_simplex(nd, rng);
      double lin = f0;
      for (std::size_t d = 0; d < nd; ++d) lin += g[d] * (other[d] - delta[d]);
      EXPECT_GE(f(game, other), lin - 1e-9);
    }
  }
}

TEST(SubgradientTest, GenericMatchesBayesAfterCentring) {
  Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const auto game = random_bayes_game(3, 2, 3, 3, rng);
    const MixedStrategy delta(uniform_simplex(3, rng));
    const auto exact = centred(bayes_subgradient(game, delta));
    const auto approx = generic_subgradient(game, delta);
    for (std::size_t d = 0; d < 3; ++d) EXPECT_NEAR(approx[d], exact[d], 1e-4);
  }
}

TEST(SubgradientTest, GenericVanishesAtSymmetricMinimum) {
  const auto ch = examples::independence_channels(0.2);
  const LeakageGame game({"id", "swap"}, {"a"}, {{ch.identity}, {ch.swap}},
                         Prior::uniform({"0", "1"}), examples::negative_shannon_entropy());
  const auto g = generic_subgradient(game, MixedStrategy({0.3, 0.7}));
  EXPECT_NEAR(g[0], -g[1], 1e-12);
  // f is symmetric around 1/2 here, so the slope there vanishes.
  const auto flat = generic_subgradient(game, MixedStrategy({0.5, 0.5}));
  EXPECT_NEAR(flat[0], 0.0, 1e-5);
}

TEST(SubgradientTest, GenericIsZeroWhenFIsConstant) {
  const auto noisy = examples::independence_channels(0.2).noisy;
  const LeakageGame game({"d0", "d1", "d2"}, {"a"}, {{noisy}, {noisy}, {noisy}},
                         Prior::uniform({"0", "1"}), examples::negative_shannon_entropy());
  for (const auto& delta : {std::vector<double>{0.2, 0.3, 0.5}, std::vector<double>{1, 0, 0}}) {
    for (double g : generic_subgradient(game, MixedStrategy(delta))) EXPECT_NEAR(g, 0.0, 1e-4);
  }
}

TEST(SubgradientTest, IdentityGainMatchesBayesRoute) {
  Rng rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    const auto bayes = random_bayes_game(3, 2, 3, 3, rng);
    std::vector<std::vector<Channel>> channels(3);
    for (std::size_t d = 0; d < 3; ++d) {
      for (std::size_t a = 0; a < 2; ++a) channels[d].push_back(bayes.channel(d, a));
    }
    const LeakageGame gain(bayes.defender_actions(), bayes.attacker_actions(), channels,
                           bayes.prior(),
                           VulnerabilityMeasure::gain(bayes.prior().labels(),
                                                      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    const MixedStrategy delta(uniform_simplex(3, rng));
    const auto exact = centred(bayes_subgradient(bayes, delta));
    const auto approx = generic_subgradient(gain, delta);
    for (std::size_t d = 0; d < 3; ++d) EXPECT_NEAR(approx[d], exact[d], 1e-4);
  }
}

TEST(SolveMinimaxTest, TwoMillionaires) {
  const auto game = examples::two_millionaires();
  const auto sg = solve_minimax(game);
  EXPECT_NEAR(sg.delta_star.probs()[0], 0.5, 1e-3);
  EXPECT_NEAR(sg.value, 0.75, 1e-3);
  const auto lp = solve_lp_bayes(game);
  EXPECT_NEAR(lp.delta_star.probs()[0], 0.5, 1e-9);
  EXPECT_NEAR(lp.value, 0.75, 1e-12);
  EXPECT_EQ(lp.gap_bound, 0.0);
  EXPECT_TRUE(lp.converged(1e-3));
}

TEST(SolveMinimaxTest, BinarySumStopsOnZeroSubgradient) {
  const auto sg = solve_minimax(examples::binary_sum());
  EXPECT_EQ(sg.delta_star.probs(), (std::vector<double>{0.5, 0.5}));
  EXPECT_EQ(sg.value, 0.5);
  EXPECT_EQ(sg.gap_bound, 0.0);
  EXPECT_LE(sg.iterations_used, 2);
}

TEST(SolveMinimaxTest, SingleDefenderActionNeedsNoIterations) {
  Rng rng(40);
  const auto game = random_bayes_game(1, 3, 3, 3, rng);
  const auto sg = solve_minimax(game);
  EXPECT_EQ(sg.iterations_used, 0);
  EXPECT_EQ(sg.delta_star.probs(), (std::vector<double>{1.0}));
  EXPECT_EQ(sg.gap_bound, 0.0);
  EXPECT_DOUBLE_EQ(sg.value, best_response_value(game, sg.delta_star));
}

TEST(SolveLpTest, SingleProfileAndBinarySum) {
  Rng rng(45);
  const auto single = random_bayes_game(1, 1, 3, 3, rng);
  const auto r = solve_lp_bayes(single);
  EXPECT_EQ(r.delta_star.probs(), (std::vector<double>{1.0}));
  EXPECT_NEAR(r.value, pure_utility(single, 0, 0), 1e-12);
  EXPECT_NEAR(solve_lp_bayes(examples::binary_sum()).value, 0.5, 1e-12);
}

TEST(SolveMinimaxTest, CertificateAndValueAreConsistent) {
  Rng rng(41);
  const auto game = random_bayes_game(3, 3, 3, 3, rng);
  const auto sg = solve_minimax(game);
  EXPECT_EQ(sg.certificate, attacker_values(game, sg.delta_star));
  EXPECT_EQ(sg.value, *std::max_element(sg.certificate.begin(), sg.certificate.end()));
}

TEST(SolveMinimaxTest, AgreesWithLpAndGridOnRandomGames) {
  Rng rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    const auto game = random_bayes_game(3, 3, 3, 3, rng);
    const auto sg = solve_minimax(game);
    const auto lp = solve_lp_bayes(game);
    const auto grid = grid_minimax(game, 0.01);
    EXPECT_NEAR(sg.value, lp.value, 1e-3);
    EXPECT_LE(lp.value, sg.value + 1e-12);
    EXPECT_LE(lp.value, grid.best_value + 1e-12);
    EXPECT_LE(grid.best_value - lp.value, grid.lipschitz_estimate * grid.resolution);
  }
}

TEST(SolveMinimaxTest, TraceIsDeterministicAndBestIsMonotone) {
  Rng rng(43);
  const auto game = random_bayes_game(3, 2, 3, 3, rng);
  SolverConfig config;
  config.max_iterations = 500;
  SubgradientTrace first, second;
  const auto r1 = solve_minimax(game, config, &first);
  const auto r2 = solve_minimax(game, config, &second);
  ASSERT_EQ(first.size(), second.size());
  ASSERT_FALSE(first.empty());
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(first[i].f, second[i].f);
    EXPECT_EQ(first[i].f_best, second[i].f_best);
    EXPECT_DOUBLE_EQ(first[i].step, config.step_scale / std::sqrt(first[i].k));
    if (i > 0) EXPECT_LE(first[i].f_best, first[i - 1].f_best);
    EXPECT_LE(first[i].f_best, first[i].f);
  }
  EXPECT_EQ(r1.delta_star, r2.delta_star);
  EXPECT_EQ(r1.value, first.back().f_best);
}

TEST(SolveMinimaxTest, NonBayesMeasureUsesGenericSubgradient) {
  // Identity gain is Bayes vulnerability in disguise.
  Rng rng(44);
  const auto bayes = random_bayes_game(3, 2, 3, 3, rng);
  std::vector<std::vector<Channel>> channels(3);
  for (std::size_t d = 0; d < 3; ++d) {
    for (std::size_t a = 0; a < 2; ++a) channels[d].push_back(bayes.channel(d, a));
  }
  const auto secrets = bayes.prior().labels();
  const LeakageGame gain(bayes.defender_actions(), bayes.attacker_actions(), channels,
                         bayes.prior(),
                         VulnerabilityMeasure::gain(secrets, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  SolverConfig config;
  config.max_iterations = 5000;
  EXPECT_NEAR(solve_minimax(gain, config).value, solve_lp_bayes(bayes).value, 2e-3);
}

TEST(SolverConfigTest, Validation) {
  SolverConfig bad;
  bad.epsilon = 0;
  EXPECT_THROW(bad.validate(), InputError);
  bad = {};
  bad.max_iterations = 0;
  EXPECT_THROW(bad.validate(), InputError);
  bad = {};
  bad.step_scale = -1;
  EXPECT_THROW(bad.validate(), InputError);
}

TEST(SolveLpTest, RequiresBayes) {
  const auto id = examples::independence_channels(0.1).identity;
  const auto game =
      testing::single_profile_game(id, examples::negative_guessing_entropy());
  EXPECT_THROW(solve_lp_bayes(game), InputError);
}

}  // namespace
}  // namespace leakgame
