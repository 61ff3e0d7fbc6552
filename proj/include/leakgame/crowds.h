#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leakgame/channel.h"
#include "leakgame/game.h"

namespace leakgame::crowds {

struct Point {
  double x = 0.0;  // meters
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

/// Snapshot of a mobile ad-hoc network. `candidates` are the locations where
/// either player may deploy a node.
struct Topology {
  std::vector<Point> nodes;
  double radius = 250.0;
  std::vector<Point> candidates;

  void validate() const;
  bool operator==(const Topology&) const = default;
};

struct CrowdsConfig {
  double p_f = 0.8;  // forwarding probability
  Topology topology;

  void validate() const;
  bool operator==(const CrowdsConfig&) const = default;
};

using Adjacency = std::vector<std::vector<std::size_t>>;

// i ~ j iff |p_i - p_j| <= radius, i != j. Neighbour lists are sorted.
Adjacency build_adjacency(const std::vector<Point>& positions, double radius);
Adjacency build_adjacency(const Topology& topology);

std::size_t edge_count(const Adjacency& adjacency);

// Label helpers shared by channels, games and tests.
std::string node_label(std::size_t node);       // "n3"
std::string detected_label(std::size_t node);   // "det:n3"
inline const std::string kUndetected = "undetected";
std::string candidate_label(std::size_t index);  // "c3"

/// Exact Crowds channel with a corrupted node at candidate `corrupted` and an
/// optional deliverer at candidate `deliverer`.
///
/// Inputs are the base nodes (the only possible initiators). Outputs are
/// "det:<k>" for every base node k adjacent to the corrupted node, the first
/// honest node observed forwarding to it, followed by "undetected". The
/// initiator always forwards to a uniform neighbour; every later honest holder
/// forwards again with probability p_f, else delivers. Reaching the deliverer
/// means delivery. Probabilities come from solving the absorbing chain
/// (I - p_f W) H = B once for all right-hand sides.
Channel crowds_channel(const CrowdsConfig& config, std::size_t corrupted,
                       std::optional<std::size_t> deliverer);

// Defender actions place the deliverer, attacker actions place the corrupted
// node; uniform prior over base nodes, Bayes vulnerability.
LeakageGame case_study_game(const CrowdsConfig& config,
                            const std::vector<std::size_t>& attacker_candidates,
                            const std::vector<std::size_t>& defender_candidates);

// Every candidate available to both players.
LeakageGame case_study_game(const CrowdsConfig& config);

}  // namespace leakgame::crowds
