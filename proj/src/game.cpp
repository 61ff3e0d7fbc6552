#include "leakgame/game.h"

#include <algorithm>

#include "leakgame/error.h"

namespace leakgame {

namespace {

// Fixed seed so a game's convexity spot-check is reproducible.
constexpr std::uint64_t kConvexitySeed = 0x5eed;
constexpr int kConvexityTrials = 256;

std::size_t index_of(const std::vector<std::string>& labels,
                     const std::string& label, const char* what) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    throw InputError(std::string("unknown ") + what + " action '" + label + "'");
  }
  return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

MixedStrategy::MixedStrategy(std::vector<double> probs) : probs_(std::move(probs)) {
  check_distribution(probs_, "mixed strategy");
}

MixedStrategy MixedStrategy::point(std::size_t size, std::size_t index) {
  if (index >= size) throw InputError("point strategy: index out of range");
  std::vector<double> p(size, 0.0);
  p[index] = 1.0;
  return MixedStrategy(std::move(p));
}

MixedStrategy MixedStrategy::uniform(std::size_t size) {
  if (size == 0) throw InputError("uniform strategy: no actions");
  return MixedStrategy(std::vector<double>(size, 1.0 / size));
}

LeakageGame::LeakageGame(std::vector<std::string> defender_actions,
                         std::vector<std::string> attacker_actions,
                         std::vector<std::vector<Channel>> channels, Prior prior,
                         VulnerabilityMeasure measure)
    : defender_actions_(std::move(defender_actions)),
      attacker_actions_(std::move(attacker_actions)),
      prior_(std::move(prior)),
      measure_(std::move(measure)) {
  if (defender_actions_.empty() || attacker_actions_.empty()) {
    throw InputError("game: both players need at least one action");
  }
  check_unique_labels(defender_actions_, "defender actions");
  check_unique_labels(attacker_actions_, "attacker actions");
  if (channels.size() != defender_actions_.size()) {
    throw InputError("game: channel table has " + std::to_string(channels.size()) +
                     " defender rows, expected " +
                     std::to_string(defender_actions_.size()));
  }
  for (const auto& row : channels) {
    if (row.size() != attacker_actions_.size()) {
      throw InputError("game: channel table row has " + std::to_string(row.size()) +
                       " attacker entries, expected " +
                       std::to_string(attacker_actions_.size()));
    }
    for (const auto& c : row) check_same_secrets(prior_, c);
  }

  channels_.reserve(attacker_actions_.size());
  for (std::size_t a = 0; a < attacker_actions_.size(); ++a) {
    std::vector<Channel> fam;
    fam.reserve(defender_actions_.size());
    for (std::size_t d = 0; d < defender_actions_.size(); ++d) {
      fam.push_back(channels[d][a]);
    }
    channels_.push_back(pad_compatible(fam));
  }

  if (measure_.kind() == VulnerabilityMeasure::Kind::kGain &&
      measure_.gain_matrix().front().size() != prior_.size()) {
    throw InputError("game: gain matrix width does not match the secrets");
  }
  if (measure_.kind() == VulnerabilityMeasure::Kind::kCustom) {
    spot_check_convexity(measure_, prior_.size(), kConvexityTrials, kConvexitySeed);
  }
}

std::size_t LeakageGame::defender_index(const std::string& action) const {
  return index_of(defender_actions_, action, "defender");
}

std::size_t LeakageGame::attacker_index(const std::string& action) const {
  return index_of(attacker_actions_, action, "attacker");
}

double pure_utility(const LeakageGame& game, std::size_t d, std::size_t a) {
  if (d >= game.num_defender_actions() || a >= game.num_attacker_actions()) {
    throw InputError("pure_utility: action index out of range");
  }
  return posterior_vulnerability(game.measure(), game.prior(), game.channel(d, a));
}

double pure_utility(const LeakageGame& game, const std::string& d,
                    const std::string& a) {
  return pure_utility(game, game.defender_index(d), game.attacker_index(a));
}

Channel mixed_channel(const LeakageGame& game, const MixedStrategy& delta,
                      std::size_t a) {
  if (delta.size() != game.num_defender_actions()) {
    throw InputError("defender strategy has " + std::to_string(delta.size()) +
                     " entries for " +
                     std::to_string(game.num_defender_actions()) + " actions");
  }
  return compose_convex(game.family(a), delta.probs());
}

std::vector<double> attacker_values(const LeakageGame& game,
                                    const MixedStrategy& delta) {
  std::vector<double> values(game.num_attacker_actions());
  for (std::size_t a = 0; a < values.size(); ++a) {
    values[a] = posterior_vulnerability(game.measure(), game.prior(),
                                        mixed_channel(game, delta, a));
  }
  return values;
}

double mixed_utility(const LeakageGame& game, const MixedStrategy& delta,
                     const MixedStrategy& alpha) {
  if (alpha.size() != game.num_attacker_actions()) {
    throw InputError("attacker strategy has " + std::to_string(alpha.size()) +
                     " entries for " +
                     std::to_string(game.num_attacker_actions()) + " actions");
  }
  const auto values = attacker_values(game, delta);
  double total = 0.0;
  for (std::size_t a = 0; a < values.size(); ++a) total += alpha[a] * values[a];
  return total;
}

BestResponse attacker_best_response(const LeakageGame& game,
                                    const MixedStrategy& delta) {
  const auto values = attacker_values(game, delta);
  BestResponse best{0, values[0]};
  for (std::size_t a = 1; a < values.size(); ++a) {
    if (values[a] > best.value) best = {a, values[a]};
  }
  return best;
}

double best_response_value(const LeakageGame& game, const MixedStrategy& delta) {
  return attacker_best_response(game, delta).value;
}

UtilityTable utility_table(const LeakageGame& game) {
  UtilityTable table;
  table.values.assign(game.num_defender_actions(),
                      std::vector<double>(game.num_attacker_actions()));
  for (std::size_t d = 0; d < game.num_defender_actions(); ++d) {
    for (std::size_t a = 0; a < game.num_attacker_actions(); ++a) {
      table.values[d][a] = pure_utility(game, d, a);
    }
  }
  return table;
}

}  // namespace leakgame
