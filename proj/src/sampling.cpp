#include "leakgame/sampling.h"

#include <cstdlib>
#include <string>

namespace leakgame {

std::vector<double> normalized_uniform(std::size_t n, Rng& rng) {
  // Open interval so no entry is exactly zero.
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> v(n);
  double total = 0.0;
  for (double& e : v) {
    do {
      e = unit(rng);
    } while (e == 0.0);
    total += e;
  }
  for (double& e : v) e /= total;
  return v;
}

std::vector<double> uniform_simplex(std::size_t n, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> v(n);
  double total = 0.0;
  for (double& e : v) {
    e = expo(rng);
    total += e;
  }
  for (double& e : v) e /= total;
  return v;
}

std::vector<std::string> indexed_labels(const std::string& prefix, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return labels;
}

Prior random_prior(std::size_t n, Rng& rng) {
  return Prior(indexed_labels("x", n), normalized_uniform(n, rng));
}

Channel random_channel(const std::vector<std::string>& inputs,
                       const std::vector<std::string>& outputs, Rng& rng) {
  std::vector<std::vector<double>> rows;
  rows.reserve(inputs.size());
  for (std::size_t x = 0; x < inputs.size(); ++x) {
    rows.push_back(normalized_uniform(outputs.size(), rng));
  }
  return Channel(inputs, outputs, rows);
}

Channel random_channel(std::size_t num_inputs, std::size_t num_outputs, Rng& rng) {
  return random_channel(indexed_labels("x", num_inputs),
                        indexed_labels("y", num_outputs), rng);
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* raw = std::getenv("LEAKGAME_SEED");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') return fallback;
  return static_cast<std::uint64_t>(v);
}

}  // namespace leakgame
