#pragma once

#include <string>
#include <vector>

#include "leakgame/channel.h"
#include "leakgame/game.h"
#include "leakgame/vulnerability.h"

namespace leakgame::examples {

// Secret x in {0,1} compared with the attacker's input a: program 0
// returns x <= a, program 1 returns x >= a. Uniform prior, Bayes measure.
LeakageGame two_millionaires();

// Program 0 returns x xor a, program 1 its complement.
LeakageGame binary_sum();

// Names accepted by by_name(), in listing order.
std::vector<std::string> names();
LeakageGame by_name(const std::string& name);

// Noisy identity, identity and swap channels on {0,1}: mixing each of the
// first two with the swap reverses the attacker's preference between them.
struct IndependenceChannels {
  Channel noisy;     // [[1-e, e], [e, 1-e]]
  Channel identity;  // [[1, 0], [0, 1]]
  Channel swap;      // [[0, 1], [1, 0]]
};
IndependenceChannels independence_channels(double e);

// Convex measures built from entropies (so they can be used as utilities).
VulnerabilityMeasure negative_shannon_entropy();
VulnerabilityMeasure negative_guessing_entropy();

// Shannon entropy itself. Concave, so the convexity checks must reject it.
VulnerabilityMeasure shannon_entropy_not_convex();

}  // namespace leakgame::examples
