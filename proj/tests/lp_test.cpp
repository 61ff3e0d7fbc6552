#include "leakgame/lp.h"

#include <gtest/gtest.h>

#include <random>

namespace leakgame::lp {
namespace {

TEST(LpTest, TextbookMaximum) {
  // max 3x + 5y  s.t.  x <= 4, 2y <= 12, 3x + 2y <= 18  ->  (2, 6), 36.
  const auto s = maximize({{1, 0}, {0, 2}, {3, 2}}, {4, 12, 18}, {3, 5});
  ASSERT_EQ(s.status, Status::kOptimal);
  EXPECT_NEAR(s.objective, 36.0, 1e-12);
  EXPECT_NEAR(s.x[0], 2.0, 1e-12);
  EXPECT_NEAR(s.x[1], 6.0, 1e-12);
}

TEST(LpTest, InfeasibleOriginNeedsPhaseOne) {
  // max -x - y  s.t.  x + y >= 2, x <= 3  ->  objective -2.
  const auto s = maximize({{-1, -1}, {1, 0}}, {-2, 3}, {-1, -1});
  ASSERT_EQ(s.status, Status::kOptimal);
  EXPECT_NEAR(s.objective, -2.0, 1e-12);
  EXPECT_NEAR(s.x[0] + s.x[1], 2.0, 1e-12);
}

TEST(LpTest, EqualityThroughTwoInequalities) {
  // x + y = 1 written as two rows; max x - y -> x = 1.
  const auto s = maximize({{1, 1}, {-1, -1}}, {1, -1}, {1, -1});
  ASSERT_EQ(s.status, Status::kOptimal);
  EXPECT_NEAR(s.objective, 1.0, 1e-12);
}

TEST(LpTest, Infeasible) {
  const auto s = maximize({{1}, {-1}}, {1, -2}, {1});
  EXPECT_EQ(s.status, Status::kInfeasible);
}

TEST(LpTest, Unbounded) {
  const auto s = maximize({{1, -1}}, {1}, {1, 0});
  EXPECT_EQ(s.status, Status::kUnbounded);
}

TEST(LpTest, DegenerateVertex) {
  // Several constraints meet at the optimum (1, 1).
  const auto s = maximize({{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}}, {1, 1, 2, 3, 3}, {1, 1});
  ASSERT_EQ(s.status, Status::kOptimal);
  EXPECT_NEAR(s.objective, 2.0, 1e-12);
}

// Weak duality as an independent check: for random bounded feasible LPs the
// primal solution is feasible and its objective matches a dual solution.
TEST(LpTest, RandomProblemsSatisfyStrongDuality) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coef(0.1, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 2 + trial % 5;
    const int n = 2 + (trial / 5) % 5;
    std::vector<std::vector<double>> A(m, std::vector<double>(n));
    std::vector<double> b(m), c(n);
    for (auto& row : A) {
      for (auto& v : row) v = coef(rng);
    }
    for (auto& v : b) v = coef(rng);
    for (auto& v : c) v = coef(rng);
    const auto primal = maximize(A, b, c);
    ASSERT_EQ(primal.status, Status::kOptimal);
    for (int i = 0; i < m; ++i) {
      double lhs = 0;
      for (int j = 0; j < n; ++j) lhs += A[i][j] * primal.x[j];
      EXPECT_LE(lhs, b[i] + 1e-9);
    }
    for (double v : primal.x) EXPECT_GE(v, -1e-12);

    // Dual: min b.y s.t. A^T y >= c, y >= 0, i.e. max -b.y s.t. -A^T y <= -c.
    std::vector<std::vector<double>> At(n, std::vector<double>(m));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) At[j][i] = -A[i][j];
    }
    std::vector<double> nb(m), nc(n);
    for (int i = 0; i < m; ++i) nb[i] = -b[i];
    for (int j = 0; j < n; ++j) nc[j] = -c[j];
    const auto dual = maximize(At, nc, nb);
    ASSERT_EQ(dual.status, Status::kOptimal);
    EXPECT_NEAR(primal.objective, -dual.objective, 1e-9);
  }
}

}  // namespace
}  // namespace leakgame::lp
