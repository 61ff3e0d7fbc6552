#include "leakgame/vulnerability.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "leakgame/error.h"
#include "leakgame/sampling.h"

namespace leakgame {

VulnerabilityMeasure VulnerabilityMeasure::bayes() { return {}; }

VulnerabilityMeasure VulnerabilityMeasure::gain(
    std::vector<std::string> guesses, std::vector<std::vector<double>> gain) {
  if (guesses.empty()) throw InputError("g-vulnerability: no guesses");
  if (gain.size() != guesses.size()) {
    throw InputError("g-vulnerability: gain has " + std::to_string(gain.size()) +
                     " rows for " + std::to_string(guesses.size()) + " guesses");
  }
  check_unique_labels(guesses, "g-vulnerability guesses");
  const std::size_t width = gain.front().size();
  if (width == 0) throw InputError("g-vulnerability: empty gain rows");
  for (const auto& row : gain) {
    if (row.size() != width) {
      throw InputError("g-vulnerability: ragged gain matrix");
    }
    for (double g : row) {
      if (!std::isfinite(g)) {
        throw InputError("g-vulnerability: gain entries must be finite");
      }
    }
  }
  VulnerabilityMeasure m;
  m.kind_ = Kind::kGain;
  m.name_ = "g";
  m.guesses_ = std::move(guesses);
  m.gain_ = std::move(gain);
  return m;
}

VulnerabilityMeasure VulnerabilityMeasure::custom(std::string name, Function fn) {
  if (!fn) throw InputError("custom measure: empty function");
  VulnerabilityMeasure m;
  m.kind_ = Kind::kCustom;
  m.name_ = std::move(name);
  m.fn_ = std::move(fn);
  return m;
}

double VulnerabilityMeasure::evaluate(std::span<const double> prior) const {
  switch (kind_) {
    case Kind::kBayes:
      return *std::max_element(prior.begin(), prior.end());
    case Kind::kGain: {
      if (gain_.front().size() != prior.size()) {
        throw InputError("g-vulnerability: gain has " +
                         std::to_string(gain_.front().size()) +
                         " columns for " + std::to_string(prior.size()) +
                         " secrets");
      }
      double best = -std::numeric_limits<double>::infinity();
      for (const auto& row : gain_) {
        double v = 0.0;
        for (std::size_t x = 0; x < prior.size(); ++x) v += row[x] * prior[x];
        best = std::max(best, v);
      }
      return best;
    }
    case Kind::kCustom:
      return fn_(prior);
  }
  return 0.0;
}

bool VulnerabilityMeasure::operator==(const VulnerabilityMeasure& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::kBayes:
      return true;
    case Kind::kGain:
      return guesses_ == other.guesses_ && gain_ == other.gain_;
    case Kind::kCustom:
      return name_ == other.name_;
  }
  return false;
}

double prior_vulnerability(const VulnerabilityMeasure& measure,
                           const Prior& prior) {
  return measure.evaluate(prior.probs());
}

double expected_posterior_vulnerability(const VulnerabilityMeasure& measure,
                                        const Prior& prior,
                                        const Channel& channel) {
  const JointDecomposition joint = decompose(prior, channel);
  double total = 0.0;
  for (const auto& post : joint.posteriors) {
    total += joint.output_marginal[post.output] *
             measure.evaluate(post.distribution.probs());
  }
  return total;
}

double posterior_vulnerability(const VulnerabilityMeasure& measure,
                               const Prior& prior, const Channel& channel) {
  check_same_secrets(prior, channel);
  const std::size_t nx = channel.num_inputs();
  const std::size_t ny = channel.num_outputs();

  switch (measure.kind()) {
    case VulnerabilityMeasure::Kind::kBayes: {
      double total = 0.0;
      for (std::size_t y = 0; y < ny; ++y) {
        double best = 0.0;
        for (std::size_t x = 0; x < nx; ++x) {
          best = std::max(best, prior[x] * channel(x, y));
        }
        total += best;
      }
      return total;
    }
    case VulnerabilityMeasure::Kind::kGain: {
      const auto& gain = measure.gain_matrix();
      if (gain.front().size() != nx) {
        throw InputError("g-vulnerability: gain width does not match secrets");
      }
      double total = 0.0;
      for (std::size_t y = 0; y < ny; ++y) {
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& row : gain) {
          double v = 0.0;
          for (std::size_t x = 0; x < nx; ++x) {
            v += row[x] * prior[x] * channel(x, y);
          }
          best = std::max(best, v);
        }
        total += best;
      }
      return total;
    }
    case VulnerabilityMeasure::Kind::kCustom:
      return expected_posterior_vulnerability(measure, prior, channel);
  }
  return 0.0;
}

double column_max_vulnerability(const Channel& channel) {
  double total = 0.0;
  for (std::size_t y = 0; y < channel.num_outputs(); ++y) {
    double best = 0.0;
    for (std::size_t x = 0; x < channel.num_inputs(); ++x) {
      best = std::max(best, channel(x, y));
    }
    total += best;
  }
  return total / static_cast<double>(channel.num_inputs());
}

LeakageReport leakage(const VulnerabilityMeasure& measure, const Prior& prior,
                      const Channel& channel) {
  LeakageReport r;
  r.prior_vulnerability = prior_vulnerability(measure, prior);
  r.posterior_vulnerability = posterior_vulnerability(measure, prior, channel);
  r.additive = r.posterior_vulnerability - r.prior_vulnerability;
  if (r.prior_vulnerability != 0.0) {
    r.multiplicative = r.posterior_vulnerability / r.prior_vulnerability;
  }
  return r;
}

void spot_check_convexity(const VulnerabilityMeasure& measure,
                          std::size_t num_secrets, int trials,
                          std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < trials; ++i) {
    const auto p1 = uniform_simplex(num_secrets, rng);
    const auto p2 = uniform_simplex(num_secrets, rng);
    const double t = unit(rng);
    std::vector<double> mix(num_secrets);
    for (std::size_t x = 0; x < num_secrets; ++x) {
      mix[x] = t * p1[x] + (1.0 - t) * p2[x];
    }
    const double lhs = measure.evaluate(mix);
    const double rhs = t * measure.evaluate(p1) + (1.0 - t) * measure.evaluate(p2);
    worst = std::max(worst, lhs - rhs);
  }
  if (worst > 1e-9) {
    throw ConvexityError("measure '" + measure.name() +
                         "' is not convex: Jensen gap violated by " +
                         std::to_string(worst));
  }
}

}  // namespace leakgame
