#include "leakgame/examples.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include "leakgame/error.h"

namespace leakgame::examples {

namespace {

using Matrix = std::vector<std::vector<double>>;

const Matrix kIdentity = {{1, 0}, {0, 1}};
const Matrix kSwap = {{0, 1}, {1, 0}};
const Matrix kAlwaysFirst = {{1, 0}, {1, 0}};

LeakageGame two_by_two(const std::vector<std::string>& outputs, const Matrix& c00,
                       const Matrix& c01, const Matrix& c10, const Matrix& c11) {
  const std::vector<std::string> secrets = {"0", "1"};
  std::vector<std::vector<Channel>> channels = {
      {Channel(secrets, outputs, c00), Channel(secrets, outputs, c01)},
      {Channel(secrets, outputs, c10), Channel(secrets, outputs, c11)}};
  return LeakageGame({"0", "1"}, {"0", "1"}, std::move(channels),
                     Prior::uniform(secrets), VulnerabilityMeasure::bayes());
}

double entropy_bits(std::span<const double> p) {
  double h = 0.0;
  for (double v : p) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

}  // namespace

LeakageGame two_millionaires() {
  return two_by_two({"T", "F"}, kIdentity, kAlwaysFirst, kAlwaysFirst, kSwap);
}

LeakageGame binary_sum() {
  return two_by_two({"0", "1"}, kIdentity, kSwap, kSwap, kIdentity);
}

std::vector<std::string> names() { return {"two_millionaires", "binary_sum"}; }

LeakageGame by_name(const std::string& name) {
  if (name == "two_millionaires") return two_millionaires();
  if (name == "binary_sum") return binary_sum();
  throw InputError("unknown example '" + name + "'");
}

IndependenceChannels independence_channels(double e) {
  const std::vector<std::string> xs = {"0", "1"};
  return {Channel(xs, xs, {{1 - e, e}, {e, 1 - e}}), Channel(xs, xs, kIdentity),
          Channel(xs, xs, kSwap)};
}

VulnerabilityMeasure negative_shannon_entropy() {
  return VulnerabilityMeasure::custom(
      "negative_shannon_entropy",
      [](std::span<const double> p) { return -entropy_bits(p); });
}

VulnerabilityMeasure negative_guessing_entropy() {
  return VulnerabilityMeasure::custom(
      "negative_guessing_entropy", [](std::span<const double> p) {
        std::vector<double> sorted(p.begin(), p.end());
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        double g = 0.0;
        for (std::size_t i = 0; i < sorted.size(); ++i) g += (i + 1) * sorted[i];
        return -g;
      });
}

VulnerabilityMeasure shannon_entropy_not_convex() {
  return VulnerabilityMeasure::custom("shannon_entropy", entropy_bits);
}

}  // namespace leakgame::examples
