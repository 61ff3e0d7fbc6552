#include "leakgame/lp.h"

#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>

#include "leakgame/error.h"

namespace leakgame::lp {

namespace {

constexpr double kEps = 1e-9;

class Tableau {
 public:
  Tableau(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
          const std::vector<double>& c)
      : m_(static_cast<int>(b.size())),
        n_(static_cast<int>(c.size())),
        nonbasic_(n_ + 1),
        basic_(m_),
        t_(m_ + 2, std::vector<double>(n_ + 2, 0.0)) {
    for (int i = 0; i < m_; ++i) {
      if (static_cast<int>(A[i].size()) != n_) {
        throw InputError("lp: constraint row width does not match objective");
      }
      for (int j = 0; j < n_; ++j) t_[i][j] = A[i][j];
      basic_[i] = n_ + i;
      t_[i][n_] = -1.0;  // auxiliary column
      t_[i][n_ + 1] = b[i];
    }
    for (int j = 0; j < n_; ++j) {
      nonbasic_[j] = j;
      t_[m_][j] = -c[j];
    }
    nonbasic_[n_] = -1;
    t_[m_ + 1][n_] = 1.0;
  }

  Solution solve() {
    Solution out;
    int r = 0;
    for (int i = 1; i < m_; ++i) {
      if (t_[i][n_ + 1] < t_[r][n_ + 1]) r = i;
    }
    if (m_ > 0 && t_[r][n_ + 1] < -kEps) {
      pivot(r, n_);
      if (!run(2) || t_[m_ + 1][n_ + 1] < -kEps) {
        out.status = Status::kInfeasible;
        return out;
      }
      // Drive the auxiliary variable out of the basis.
      for (int i = 0; i < m_; ++i) {
        if (basic_[i] != -1) continue;
        int s = 0;
        for (int j = 1; j <= n_; ++j) {
          if (better(t_[i][j], nonbasic_[j], t_[i][s], nonbasic_[s])) s = j;
        }
        pivot(i, s);
      }
    }
    const bool bounded = run(1);
    out.x.assign(n_, 0.0);
    for (int i = 0; i < m_; ++i) {
      if (basic_[i] < n_) out.x[basic_[i]] = t_[i][n_ + 1];
    }
    if (!bounded) {
      out.status = Status::kUnbounded;
      out.objective = std::numeric_limits<double>::infinity();
      return out;
    }
    out.status = Status::kOptimal;
    out.objective = t_[m_][n_ + 1];
    return out;
  }

 private:
  static bool better(double v, int idx, double best_v, int best_idx) {
    return v < best_v || (v == best_v && idx < best_idx);
  }

  void pivot(int r, int s) {
    const double inv = 1.0 / t_[r][s];
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r || std::abs(t_[i][s]) <= kEps) continue;
      const double factor = t_[i][s] * inv;
      for (int j = 0; j < n_ + 2; ++j) t_[i][j] -= t_[r][j] * factor;
      t_[i][s] = t_[r][s] * factor;
    }
    for (int j = 0; j < n_ + 2; ++j) {
      if (j != s) t_[r][j] *= inv;
    }
    for (int i = 0; i < m_ + 2; ++i) {
      if (i != r) t_[i][s] *= -inv;
    }
    t_[r][s] = inv;
    std::swap(basic_[r], nonbasic_[s]);
  }

  // phase 1 optimizes the real objective, phase 2 the auxiliary one.
  bool run(int phase) {
    const int row = m_ + phase - 1;
    const long dantzig_budget = 50L * (m_ + n_ + 2);
    for (long iteration = 0;; ++iteration) {
      int s = -1;
      if (iteration < dantzig_budget) {
        for (int j = 0; j <= n_; ++j) {
          if (nonbasic_[j] == -phase) continue;
          if (s == -1 ||
              better(t_[row][j], nonbasic_[j], t_[row][s], nonbasic_[s])) {
            s = j;
          }
        }
        if (t_[row][s] >= -kEps) return true;
      } else {
        // Bland's rule: lowest-index improving variable. Guarantees
        // termination on degenerate problems where the steepest rule stalls.
        for (int j = 0; j <= n_; ++j) {
          if (nonbasic_[j] == -phase || t_[row][j] >= -kEps) continue;
          if (s == -1 || nonbasic_[j] < nonbasic_[s]) s = j;
        }
        if (s == -1) return true;
      }
      int r = -1;
      for (int i = 0; i < m_; ++i) {
        if (t_[i][s] <= kEps) continue;
        if (r == -1) {
          r = i;
          continue;
        }
        const double lhs = t_[i][n_ + 1] / t_[i][s];
        const double rhs = t_[r][n_ + 1] / t_[r][s];
        if (lhs < rhs || (lhs == rhs && basic_[i] < basic_[r])) r = i;
      }
      if (r == -1) return false;
      pivot(r, s);
    }
  }

  int m_;
  int n_;
  std::vector<int> nonbasic_;
  std::vector<int> basic_;
  std::vector<std::vector<double>> t_;
};

}  // namespace

Solution maximize(const std::vector<std::vector<double>>& A,
                  const std::vector<double>& b, const std::vector<double>& c) {
  if (A.size() != b.size()) {
    throw InputError("lp: constraint matrix and bound vector sizes differ");
  }
  return Tableau(A, b, c).solve();
}

}  // namespace leakgame::lp
