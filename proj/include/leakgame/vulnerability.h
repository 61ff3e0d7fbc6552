#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leakgame/channel.h"

namespace leakgame {

/// A convex, continuous function on priors. Three kinds:
///   - Bayes: max_x pi(x)
///   - g-vulnerability: max_w sum_x gain(w, x) pi(x) over a finite guess set
///   - custom: a caller-supplied function the caller declares convex
class VulnerabilityMeasure {
 public:
  enum class Kind { kBayes, kGain, kCustom };
  using Function = std::function<double(std::span<const double>)>;

  static VulnerabilityMeasure bayes();
  // `gain` is |guesses| x |secrets|.
  static VulnerabilityMeasure gain(std::vector<std::string> guesses,
                                   std::vector<std::vector<double>> gain);
  static VulnerabilityMeasure custom(std::string name, Function fn);

  Kind kind() const { return kind_; }
  bool is_bayes() const { return kind_ == Kind::kBayes; }
  const std::string& name() const { return name_; }

  const std::vector<std::string>& guesses() const { return guesses_; }
  const std::vector<std::vector<double>>& gain_matrix() const { return gain_; }

  // Value on a prior given as raw probabilities (already validated).
  double evaluate(std::span<const double> prior) const;

  // Custom measures compare equal only to themselves by name.
  bool operator==(const VulnerabilityMeasure& other) const;

 private:
  VulnerabilityMeasure() = default;

  Kind kind_ = Kind::kBayes;
  std::string name_ = "bayes";
  std::vector<std::string> guesses_;
  std::vector<std::vector<double>> gain_;
  Function fn_;
};

double prior_vulnerability(const VulnerabilityMeasure& measure, const Prior& prior);

// sum_y p(y) V(p_{X|y}). Bayes and g-vulnerability use the algebraically
// equal closed forms sum_y max_w sum_x gain(w,x) pi(x) C(x,y); custom measures
// go through decompose().
double posterior_vulnerability(const VulnerabilityMeasure& measure,
                               const Prior& prior, const Channel& channel);

// Always the generic expectation over the joint decomposition. Kept separate
// so the closed forms can be cross-checked against it.
double expected_posterior_vulnerability(const VulnerabilityMeasure& measure,
                                        const Prior& prior,
                                        const Channel& channel);

// Bayes posterior vulnerability under a uniform prior:
// sum_y max_x C(x,y) / |X|.
double column_max_vulnerability(const Channel& channel);

struct LeakageReport {
  double prior_vulnerability = 0.0;
  double posterior_vulnerability = 0.0;
  double additive = 0.0;
  std::optional<double> multiplicative;  // absent when the prior value is 0
};

LeakageReport leakage(const VulnerabilityMeasure& measure, const Prior& prior,
                      const Channel& channel);

// Midpoint-convexity spot check on `trials` random prior pairs over
// `num_secrets` secrets. Throws ConvexityError with the worst violation if
// V(t p1 + (1-t) p2) > t V(p1) + (1-t) V(p2) + 1e-9 anywhere.
void spot_check_convexity(const VulnerabilityMeasure& measure,
                          std::size_t num_secrets, int trials,
                          std::uint64_t seed);

}  // namespace leakgame
