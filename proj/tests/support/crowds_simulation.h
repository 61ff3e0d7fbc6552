#pragma once

// Monte-Carlo Crowds simulator used as an independent oracle for the exact
// channel computation. Shares nothing with the library beyond the Point and
// config types: adjacency and the walk are reimplemented here.

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "leakgame/crowds.h"

namespace leakgame::testing {

struct SimulatedRow {
  // Keyed by output label ("det:n3" or "undetected").
  std::map<std::string, long> counts;
  long runs = 0;

  double frequency(const std::string& label) const {
    auto it = counts.find(label);
    return it == counts.end() ? 0.0 : static_cast<double>(it->second) / runs;
  }
};

class CrowdsSimulator {
 public:
  CrowdsSimulator(const crowds::CrowdsConfig& config, std::size_t corrupted,
                  std::optional<std::size_t> deliverer)
      : n_(config.topology.nodes.size()), p_f_(config.p_f) {
    std::vector<crowds::Point> pos = config.topology.nodes;
    pos.push_back(config.topology.candidates[corrupted]);
    if (deliverer) pos.push_back(config.topology.candidates[*deliverer]);
    neighbours_.resize(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i) {
      for (std::size_t j = 0; j < pos.size(); ++j) {
        if (i == j) continue;
        const double dx = pos[i].x - pos[j].x;
        const double dy = pos[i].y - pos[j].y;
        if (std::sqrt(dx * dx + dy * dy) <= config.topology.radius) {
          neighbours_[i].push_back(j);
        }
      }
    }
  }

  SimulatedRow run(std::size_t initiator, long runs, std::mt19937_64& rng) const {
    // Slot k < n counts detections of node k; slot n counts undetected runs.
    std::vector<long> slots(n_ + 1, 0);
    std::bernoulli_distribution keep_forwarding(p_f_);
    for (long r = 0; r < runs; ++r) {
      std::size_t holder = initiator;
      bool must_forward = true;  // the initiator never delivers itself
      for (;;) {
        if (!must_forward && !keep_forwarding(rng)) {
          ++slots[n_];
          break;
        }
        must_forward = false;
        const auto& nb = neighbours_[holder];
        std::uniform_int_distribution<std::size_t> pick(0, nb.size() - 1);
        const std::size_t next = nb[pick(rng)];
        if (next == n_) {  // corrupted node
          ++slots[holder];
          break;
        }
        if (next > n_) {  // deliverer
          ++slots[n_];
          break;
        }
        holder = next;
      }
    }
    SimulatedRow row;
    row.runs = runs;
    for (std::size_t k = 0; k < n_; ++k) {
      if (slots[k] > 0) row.counts["det:n" + std::to_string(k)] = slots[k];
    }
    if (slots[n_] > 0) row.counts["undetected"] = slots[n_];
    return row;
  }

 private:
  std::size_t n_;
  double p_f_;
  std::vector<std::vector<std::size_t>> neighbours_;
};

}  // namespace leakgame::testing
