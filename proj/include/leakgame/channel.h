#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace leakgame {

// Absolute tolerance on the total mass of a distribution or channel row.
inline constexpr double kStochasticTolerance = 1e-9;

// Throws InputError unless `probs` is non-empty, non-negative and sums to 1
// within kStochasticTolerance. `what` names the vector in the message.
void check_distribution(std::span<const double> probs, const std::string& what);

// Throws InputError if `labels` contains a duplicate.
void check_unique_labels(const std::vector<std::string>& labels,
                         const std::string& what);

/// Probability distribution over labelled secrets.
class Prior {
 public:
  Prior(std::vector<std::string> labels, std::vector<double> probs);

  static Prior uniform(std::vector<std::string> labels);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const Prior&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<double> probs_;
};

/// Row-stochastic matrix of conditional probabilities C(x, y) from labelled
/// secrets to labelled observables. Immutable once constructed; the
/// constructor enforces every invariant.
class Channel {
 public:
  Channel(std::vector<std::string> inputs, std::vector<std::string> outputs,
          const std::vector<std::vector<double>>& rows);

  std::size_t num_inputs() const { return inputs_.size(); }
  std::size_t num_outputs() const { return outputs_.size(); }

  double operator()(std::size_t x, std::size_t y) const {
    return entries_[x * outputs_.size() + y];
  }
  std::span<const double> row(std::size_t x) const {
    return std::span<const double>(entries_).subspan(x * outputs_.size(),
                                                     outputs_.size());
  }
  std::vector<std::vector<double>> rows() const;

  const std::vector<std::string>& inputs() const { return inputs_; }
  const std::vector<std::string>& outputs() const { return outputs_; }

  bool operator==(const Channel&) const = default;

 private:
  std::vector<std::string> inputs_;
  std::vector<std::string> outputs_;
  std::vector<double> entries_;  // row-major, inputs x outputs
};

// Same as the Channel constructor; named for call sites that read as a check.
Channel validate_channel(const std::vector<std::vector<double>>& matrix,
                         std::vector<std::string> input_labels,
                         std::vector<std::string> output_labels);

// Extends every channel to the union of all output labels (first-seen order)
// with zero columns. All channels must share the same input labels.
std::vector<Channel> pad_compatible(std::span<const Channel> channels);

// Entry-wise convex combination sum_i weights[i] * channels[i]. Channels must
// have identical input and output labels.
Channel compose_convex(std::span<const Channel> channels,
                       std::span<const double> weights);

struct Posterior {
  std::size_t output;  // column index in the channel
  Prior distribution;
};

/// Output marginal p(y) and the posteriors p(x|y) for every y with p(y) > 0.
struct JointDecomposition {
  std::vector<double> output_marginal;
  std::vector<Posterior> posteriors;
};

JointDecomposition decompose(const Prior& prior, const Channel& channel);

// Throws InputError unless the prior's labels equal the channel's inputs.
void check_same_secrets(const Prior& prior, const Channel& channel);

}  // namespace leakgame
