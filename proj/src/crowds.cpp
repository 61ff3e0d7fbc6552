#include "leakgame/crowds.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "leakgame/error.h"

namespace leakgame::crowds {

void Topology::validate() const {
  if (nodes.empty()) throw InputError("topology: no nodes");
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw InputError("topology: radius must be positive");
  }
  auto finite = [](const Point& p) { return std::isfinite(p.x) && std::isfinite(p.y); };
  if (!std::all_of(nodes.begin(), nodes.end(), finite) ||
      !std::all_of(candidates.begin(), candidates.end(), finite)) {
    throw InputError("topology: coordinates must be finite");
  }
}

void CrowdsConfig::validate() const {
  if (!(p_f > 0.0 && p_f < 1.0)) {
    throw InputError("crowds: p_f must lie in (0, 1)");
  }
  topology.validate();
}

Adjacency build_adjacency(const std::vector<Point>& positions, double radius) {
  const std::size_t n = positions.size();
  Adjacency adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dist = std::hypot(positions[i].x - positions[j].x,
                                     positions[i].y - positions[j].y);
      if (dist <= radius) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

Adjacency build_adjacency(const Topology& topology) {
  return build_adjacency(topology.nodes, topology.radius);
}

std::size_t edge_count(const Adjacency& adjacency) {
  std::size_t total = 0;
  for (const auto& list : adjacency) total += list.size();
  return total / 2;
}

std::string node_label(std::size_t node) { return "n" + std::to_string(node); }
std::string detected_label(std::size_t node) { return "det:" + node_label(node); }
std::string candidate_label(std::size_t index) { return "c" + std::to_string(index); }

Channel crowds_channel(const CrowdsConfig& config, std::size_t corrupted,
                       std::optional<std::size_t> deliverer) {
  config.validate();
  const Topology& topo = config.topology;
  if (corrupted >= topo.candidates.size() ||
      (deliverer && *deliverer >= topo.candidates.size())) {
    throw InputError("crowds: candidate index out of range");
  }

  // Node layout: base nodes 0..n-1, then the corrupted node, then the
  // deliverer if any.
  const std::size_t n = topo.nodes.size();
  const std::size_t corrupt_id = n;
  std::vector<Point> positions = topo.nodes;
  positions.push_back(topo.candidates[corrupted]);
  if (deliverer) positions.push_back(topo.candidates[*deliverer]);
  const Adjacency adj = build_adjacency(positions, topo.radius);

  for (std::size_t x = 0; x < n; ++x) {
    if (adj[x].empty()) {
      throw ModelingError("crowds: initiator " + node_label(x) +
                          " has no neighbours");
    }
  }

  std::vector<std::size_t> watched;  // base nodes adjacent to the corrupted node
  for (std::size_t k : adj[corrupt_id]) {
    if (k < n) watched.push_back(k);
  }
  std::vector<int> column_of(n, -1);
  for (std::size_t c = 0; c < watched.size(); ++c) {
    column_of[watched[c]] = static_cast<int>(c);
  }
  const std::size_t undetected_col = watched.size();
  const std::size_t num_cols = watched.size() + 1;

  // Forwarder j holds the message and is about to flip the p_f coin.
  //   H_j = p_f / deg(j) * (direct_j + sum_{honest i ~ j} H_i)
  //   U_j = (1 - p_f) + p_f / deg(j) * ([deliverer ~ j] + sum_i U_i)
  const double pf = config.p_f;
  Eigen::MatrixXd system = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(n, num_cols);
  for (std::size_t j = 0; j < n; ++j) {
    const double share = pf / static_cast<double>(adj[j].size());
    rhs(j, undetected_col) = 1.0 - pf;
    for (std::size_t i : adj[j]) {
      if (i < n) {
        system(j, i) -= share;
      } else if (i == corrupt_id) {
        rhs(j, column_of[j]) += share;
      } else {
        rhs(j, undetected_col) += share;
      }
    }
  }
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
  const Eigen::MatrixXd held = lu.solve(rhs);
  if (!held.allFinite() || (system * held - rhs).cwiseAbs().maxCoeff() > 1e-10) {
    throw NumericalError("crowds: absorbing-chain system is singular");
  }

  // The initiator always forwards once, without the p_f coin.
  std::vector<std::vector<double>> rows(n, std::vector<double>(num_cols, 0.0));
  for (std::size_t x = 0; x < n; ++x) {
    const double share = 1.0 / static_cast<double>(adj[x].size());
    auto& row = rows[x];
    for (std::size_t i : adj[x]) {
      if (i < n) {
        for (std::size_t c = 0; c < num_cols; ++c) row[c] += share * held(i, c);
      } else if (i == corrupt_id) {
        row[column_of[x]] += share;
      } else {
        row[undetected_col] += share;
      }
    }
    for (double& v : row) v = std::clamp(v, 0.0, 1.0);
  }

  std::vector<std::string> inputs;
  for (std::size_t x = 0; x < n; ++x) inputs.push_back(node_label(x));
  std::vector<std::string> outputs;
  for (std::size_t k : watched) outputs.push_back(detected_label(k));
  outputs.push_back(kUndetected);
  return Channel(std::move(inputs), std::move(outputs), rows);
}

LeakageGame case_study_game(const CrowdsConfig& config,
                            const std::vector<std::size_t>& attacker_candidates,
                            const std::vector<std::size_t>& defender_candidates) {
  if (attacker_candidates.empty() || defender_candidates.empty()) {
    throw InputError("crowds: both players need at least one candidate");
  }
  std::vector<std::string> defender_actions;
  std::vector<std::string> attacker_actions;
  for (std::size_t c : defender_candidates) defender_actions.push_back(candidate_label(c));
  for (std::size_t c : attacker_candidates) attacker_actions.push_back(candidate_label(c));

  std::vector<std::vector<Channel>> channels(defender_candidates.size());
  for (std::size_t d = 0; d < defender_candidates.size(); ++d) {
    for (std::size_t a : attacker_candidates) {
      channels[d].push_back(crowds_channel(config, a, defender_candidates[d]));
    }
  }
  std::vector<std::string> secrets;
  for (std::size_t x = 0; x < config.topology.nodes.size(); ++x) {
    secrets.push_back(node_label(x));
  }
  return LeakageGame(std::move(defender_actions), std::move(attacker_actions),
                     std::move(channels), Prior::uniform(std::move(secrets)),
                     VulnerabilityMeasure::bayes());
}

LeakageGame case_study_game(const CrowdsConfig& config) {
  std::vector<std::size_t> all(config.topology.candidates.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return case_study_game(config, all, all);
}

}  // namespace leakgame::crowds
