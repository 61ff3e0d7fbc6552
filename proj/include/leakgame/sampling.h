#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "leakgame/channel.h"

namespace leakgame {

using Rng = std::mt19937_64;

// Independent U(0,1) draws divided by their sum. Strictly positive entries.
std::vector<double> normalized_uniform(std::size_t n, Rng& rng);

// Uniform draw from the probability simplex (normalized exponentials).
std::vector<double> uniform_simplex(std::size_t n, Rng& rng);

// "s0", "s1", ... style labels.
std::vector<std::string> indexed_labels(const std::string& prefix, std::size_t n);

Prior random_prior(std::size_t n, Rng& rng);

// Every row drawn with normalized_uniform, so all entries are positive.
Channel random_channel(std::size_t num_inputs, std::size_t num_outputs, Rng& rng);
Channel random_channel(const std::vector<std::string>& inputs,
                       const std::vector<std::string>& outputs, Rng& rng);

// Seed for randomized checks: LEAKGAME_SEED if set and parseable, else
// `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback);

}  // namespace leakgame
