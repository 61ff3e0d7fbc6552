#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "leakgame/channel.h"
#include "leakgame/vulnerability.h"

namespace leakgame {

/// Probability distribution over a player's action list.
class MixedStrategy {
 public:
  explicit MixedStrategy(std::vector<double> probs);

  static MixedStrategy point(std::size_t size, std::size_t index);
  static MixedStrategy uniform(std::size_t size);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }

  bool operator==(const MixedStrategy&) const = default;

 private:
  std::vector<double> probs_;
};

/// Zero-sum information-leakage game. The utility of a pure profile (d, a) is
/// the posterior vulnerability of C_da; utilities are always the attacker's.
///
/// Channels for a fixed attacker action may disagree on their output labels;
/// the constructor pads each such family to a common output set. Different
/// attacker actions may keep different observation spaces.
class LeakageGame {
 public:
  // `channels` is indexed [d][a].
  LeakageGame(std::vector<std::string> defender_actions,
              std::vector<std::string> attacker_actions,
              std::vector<std::vector<Channel>> channels, Prior prior,
              VulnerabilityMeasure measure);

  std::size_t num_defender_actions() const { return defender_actions_.size(); }
  std::size_t num_attacker_actions() const { return attacker_actions_.size(); }
  const std::vector<std::string>& defender_actions() const { return defender_actions_; }
  const std::vector<std::string>& attacker_actions() const { return attacker_actions_; }

  std::size_t defender_index(const std::string& action) const;
  std::size_t attacker_index(const std::string& action) const;

  const Channel& channel(std::size_t d, std::size_t a) const {
    return channels_[a][d];
  }
  // The padded family {C_da}_d for one attacker action.
  std::span<const Channel> family(std::size_t a) const { return channels_[a]; }

  const Prior& prior() const { return prior_; }
  const VulnerabilityMeasure& measure() const { return measure_; }

  bool operator==(const LeakageGame&) const = default;

 private:
  std::vector<std::string> defender_actions_;
  std::vector<std::string> attacker_actions_;
  std::vector<std::vector<Channel>> channels_;  // [a][d], padded per a
  Prior prior_;
  VulnerabilityMeasure measure_;
};

double pure_utility(const LeakageGame& game, std::size_t d, std::size_t a);
double pure_utility(const LeakageGame& game, const std::string& d,
                    const std::string& a);

// C_{delta a} = sum_d delta(d) C_da.
Channel mixed_channel(const LeakageGame& game, const MixedStrategy& delta,
                      std::size_t a);

// V_hat[pi, C_{delta a}] for every attacker action a, in action order.
std::vector<double> attacker_values(const LeakageGame& game,
                                    const MixedStrategy& delta);

double mixed_utility(const LeakageGame& game, const MixedStrategy& delta,
                     const MixedStrategy& alpha);

struct BestResponse {
  std::size_t action = 0;
  double value = 0.0;  // f(delta)
};

// Maximizing attacker action; ties go to the lowest index.
BestResponse attacker_best_response(const LeakageGame& game,
                                    const MixedStrategy& delta);

// f(delta) = max_a V_hat[pi, C_{delta a}].
double best_response_value(const LeakageGame& game, const MixedStrategy& delta);

struct UtilityTable {
  std::vector<std::vector<double>> values;  // [d][a]
};

UtilityTable utility_table(const LeakageGame& game);

}  // namespace leakgame
