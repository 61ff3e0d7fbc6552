#include "leakgame/channel.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "leakgame/error.h"

namespace leakgame {

void check_distribution(std::span<const double> probs, const std::string& what) {
  if (probs.empty()) throw InputError(what + ": empty distribution");
  double total = 0.0;
  for (double p : probs) {
    if (!std::isfinite(p) || p < 0.0) {
      throw InputError(what + ": entries must be finite and non-negative");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kStochasticTolerance) {
    throw InputError(what + ": entries sum to " + std::to_string(total) +
                     ", expected 1");
  }
}

void check_unique_labels(const std::vector<std::string>& labels,
                         const std::string& what) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw InputError(what + ": duplicate label '" + l + "'");
    }
  }
}

Prior::Prior(std::vector<std::string> labels, std::vector<double> probs)
    : labels_(std::move(labels)), probs_(std::move(probs)) {
  if (labels_.size() != probs_.size()) {
    throw InputError("prior: " + std::to_string(labels_.size()) +
                     " labels for " + std::to_string(probs_.size()) +
                     " probabilities");
  }
  check_unique_labels(labels_, "prior");
  check_distribution(probs_, "prior");
}

Prior Prior::uniform(std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  if (n == 0) throw InputError("prior: no secrets");
  return Prior(std::move(labels), std::vector<double>(n, 1.0 / n));
}

Channel::Channel(std::vector<std::string> inputs,
                 std::vector<std::string> outputs,
                 const std::vector<std::vector<double>>& rows)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)) {
  if (inputs_.empty() || outputs_.empty()) {
    throw InputError("channel: needs at least one input and one output");
  }
  if (rows.size() != inputs_.size()) {
    throw InputError("channel: " + std::to_string(rows.size()) +
                     " rows for " + std::to_string(inputs_.size()) +
                     " input labels");
  }
  check_unique_labels(inputs_, "channel inputs");
  check_unique_labels(outputs_, "channel outputs");

  entries_.reserve(inputs_.size() * outputs_.size());
  for (std::size_t x = 0; x < rows.size(); ++x) {
    const auto& r = rows[x];
    if (r.size() != outputs_.size()) {
      throw InputError("channel: row '" + inputs_[x] + "' has " +
                       std::to_string(r.size()) + " entries, expected " +
                       std::to_string(outputs_.size()));
    }
    double total = 0.0;
    for (double v : r) {
      if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
        throw InputError("channel: row '" + inputs_[x] +
                         "' has an entry outside [0,1]");
      }
      total += v;
    }
    if (std::abs(total - 1.0) > kStochasticTolerance) {
      throw InputError("channel: row '" + inputs_[x] + "' sums to " +
                       std::to_string(total));
    }
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

std::vector<std::vector<double>> Channel::rows() const {
  std::vector<std::vector<double>> out;
  out.reserve(num_inputs());
  for (std::size_t x = 0; x < num_inputs(); ++x) {
    auto r = row(x);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

Channel validate_channel(const std::vector<std::vector<double>>& matrix,
                         std::vector<std::string> input_labels,
                         std::vector<std::string> output_labels) {
  return Channel(std::move(input_labels), std::move(output_labels), matrix);
}

std::vector<Channel> pad_compatible(std::span<const Channel> channels) {
  if (channels.empty()) return {};
  const auto& inputs = channels.front().inputs();
  std::vector<std::string> outputs;
  std::unordered_map<std::string, std::size_t> column;
  for (const auto& c : channels) {
    if (c.inputs() != inputs) {
      throw InputError("pad_compatible: channels have different input labels");
    }
    for (const auto& y : c.outputs()) {
      if (column.emplace(y, outputs.size()).second) outputs.push_back(y);
    }
  }

  std::vector<Channel> padded;
  padded.reserve(channels.size());
  for (const auto& c : channels) {
    if (c.outputs() == outputs) {
      padded.push_back(c);
      continue;
    }
    std::vector<std::vector<double>> rows(c.num_inputs(),
                                          std::vector<double>(outputs.size()));
    for (std::size_t x = 0; x < c.num_inputs(); ++x) {
      for (std::size_t y = 0; y < c.num_outputs(); ++y) {
        rows[x][column.at(c.outputs()[y])] = c(x, y);
      }
    }
    padded.emplace_back(inputs, outputs, rows);
  }
  return padded;
}

Channel compose_convex(std::span<const Channel> channels,
                       std::span<const double> weights) {
  if (channels.size() != weights.size()) {
    throw InputError("compose_convex: " + std::to_string(weights.size()) +
                     " weights for " + std::to_string(channels.size()) +
                     " channels");
  }
  check_distribution(weights, "compose_convex weights");
  const Channel& first = channels.front();
  for (const auto& c : channels) {
    if (c.inputs() != first.inputs() || c.outputs() != first.outputs()) {
      throw InputError(
          "compose_convex: channels are not compatible (pad them first)");
    }
  }

  std::vector<std::vector<double>> rows(
      first.num_inputs(), std::vector<double>(first.num_outputs(), 0.0));
  for (std::size_t i = 0; i < channels.size(); ++i) {
    if (weights[i] == 0.0) continue;
    for (std::size_t x = 0; x < first.num_inputs(); ++x) {
      auto src = channels[i].row(x);
      for (std::size_t y = 0; y < src.size(); ++y) {
        rows[x][y] += weights[i] * src[y];
      }
    }
  }
  // Accumulated rounding can push an entry a hair past 1.
  for (auto& r : rows) {
    for (double& v : r) v = std::min(v, 1.0);
  }
  return Channel(first.inputs(), first.outputs(), rows);
}

void check_same_secrets(const Prior& prior, const Channel& channel) {
  if (prior.labels() != channel.inputs()) {
    throw InputError("prior labels do not match the channel inputs");
  }
}

JointDecomposition decompose(const Prior& prior, const Channel& channel) {
  check_same_secrets(prior, channel);
  const std::size_t nx = channel.num_inputs();
  const std::size_t ny = channel.num_outputs();

  JointDecomposition out;
  out.output_marginal.assign(ny, 0.0);
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      out.output_marginal[y] += prior[x] * channel(x, y);
    }
  }
  for (std::size_t y = 0; y < ny; ++y) {
    const double py = out.output_marginal[y];
    if (py <= 0.0) continue;
    std::vector<double> post(nx);
    for (std::size_t x = 0; x < nx; ++x) post[x] = prior[x] * channel(x, y) / py;
    out.posteriors.push_back({y, Prior(prior.labels(), std::move(post))});
  }
  return out;
}

}  // namespace leakgame
