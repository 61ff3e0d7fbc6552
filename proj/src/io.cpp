#include "leakgame/io.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "leakgame/error.h"

namespace leakgame::io {

namespace {

template <typename F>
auto guarded(const std::string& what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw InputError(what + ": " + e.what());
  }
}

Json number_array(std::span<const double> values) {
  Json arr = Json::array();
  for (double v : values) arr.push_back(round12(v));
  return arr;
}

Json number_matrix(const std::vector<std::vector<double>>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) arr.push_back(number_array(r));
  return arr;
}

const Json& field(const Json& doc, const char* key, const std::string& what) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw InputError(what + ": missing field '" + key + "'");
  }
  return doc.at(key);
}

std::vector<std::string> labels_from(const Json& doc, const std::string& what) {
  if (!doc.is_array()) throw InputError(what + ": expected an array of labels");
  std::vector<std::string> out;
  for (const auto& v : doc) {
    if (v.is_string()) {
      out.push_back(v.get<std::string>());
    } else if (v.is_number_integer()) {
      out.push_back(std::to_string(v.get<long long>()));
    } else {
      throw InputError(what + ": labels must be strings or integers");
    }
  }
  return out;
}

std::string profile_key(const std::string& d, const std::string& a) {
  return d + "," + a;
}

crowds::Point point_from(const Json& doc) {
  if (!doc.is_array() || doc.size() != 2) {
    throw InputError("topology: points are [x, y] pairs");
  }
  return {doc.at(0).get<double>(), doc.at(1).get<double>()};
}

Json point_array(const std::vector<crowds::Point>& points) {
  Json arr = Json::array();
  for (const auto& p : points) arr.push_back(Json::array({round12(p.x), round12(p.y)}));
  return arr;
}

}  // namespace

double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no "-0.0" in output
}

Json parse(const std::string& text) {
  return guarded("invalid JSON", [&] { return Json::parse(text); });
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return guarded("invalid JSON in '" + path.string() + "'",
                 [&] { return Json::parse(buf.str()); });
}

void write_file(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << dump(doc) << '\n';
  if (!out) throw InputError("failed writing '" + path.string() + "'");
}

std::string dump(const Json& doc) { return doc.dump(2); }

Json to_json(const Channel& channel) {
  Json doc;
  doc["inputs"] = channel.inputs();
  doc["outputs"] = channel.outputs();
  doc["rows"] = number_matrix(channel.rows());
  return doc;
}

Channel channel_from_json(const Json& doc) {
  return guarded("channel", [&] {
    auto rows = field(doc, "rows", "channel").get<std::vector<std::vector<double>>>();
    return validate_channel(rows, labels_from(field(doc, "inputs", "channel"), "channel inputs"),
                            labels_from(field(doc, "outputs", "channel"), "channel outputs"));
  });
}

Json to_json(const VulnerabilityMeasure& measure) {
  switch (measure.kind()) {
    case VulnerabilityMeasure::Kind::kBayes:
      return "bayes";
    case VulnerabilityMeasure::Kind::kGain: {
      Json g;
      g["guesses"] = measure.guesses();
      g["gain"] = number_matrix(measure.gain_matrix());
      Json doc;
      doc["g"] = std::move(g);
      return doc;
    }
    case VulnerabilityMeasure::Kind::kCustom:
      break;
  }
  throw InputError("custom measure '" + measure.name() + "' cannot be serialized");
}

VulnerabilityMeasure measure_from_json(const Json& doc) {
  return guarded("measure", [&] {
    if (doc.is_string()) {
      if (doc.get<std::string>() == "bayes") return VulnerabilityMeasure::bayes();
      throw InputError("measure: unknown measure '" + doc.get<std::string>() + "'");
    }
    const Json& g = field(doc, "g", "measure");
    return VulnerabilityMeasure::gain(
        labels_from(field(g, "guesses", "measure"), "guesses"),
        field(g, "gain", "measure").get<std::vector<std::vector<double>>>());
  });
}

Json to_json(const LeakageGame& game) {
  Json doc;
  doc["secrets"] = game.prior().labels();
  doc["prior"] = number_array(game.prior().probs());
  doc["defender_actions"] = game.defender_actions();
  doc["attacker_actions"] = game.attacker_actions();
  doc["measure"] = to_json(game.measure());
  Json channels = Json::object();
  for (std::size_t d = 0; d < game.num_defender_actions(); ++d) {
    for (std::size_t a = 0; a < game.num_attacker_actions(); ++a) {
      channels[profile_key(game.defender_actions()[d], game.attacker_actions()[a])] =
          to_json(game.channel(d, a));
    }
  }
  doc["channels"] = std::move(channels);
  return doc;
}

LeakageGame game_from_json(const Json& doc) {
  return guarded("game", [&] {
    auto secrets = labels_from(field(doc, "secrets", "game"), "secrets");
    auto probs = field(doc, "prior", "game").get<std::vector<double>>();
    auto defender = labels_from(field(doc, "defender_actions", "game"), "defender actions");
    auto attacker = labels_from(field(doc, "attacker_actions", "game"), "attacker actions");
    for (const auto* list : {&defender, &attacker}) {
      for (const auto& label : *list) {
        if (label.find(',') != std::string::npos) {
          throw InputError("game: action labels may not contain ','");
        }
      }
    }
    const Json& channel_doc = field(doc, "channels", "game");
    if (!channel_doc.is_object()) throw InputError("game: 'channels' must be an object");
    if (channel_doc.size() != defender.size() * attacker.size()) {
      throw InputError("game: expected " + std::to_string(defender.size() * attacker.size()) +
                       " channels, found " + std::to_string(channel_doc.size()));
    }
    std::vector<std::vector<Channel>> channels(defender.size());
    for (std::size_t d = 0; d < defender.size(); ++d) {
      for (const auto& a : attacker) {
        const auto key = profile_key(defender[d], a);
        if (!channel_doc.contains(key)) {
          throw InputError("game: missing channel for profile '" + key + "'");
        }
        channels[d].push_back(channel_from_json(channel_doc.at(key)));
      }
    }
    return LeakageGame(std::move(defender), std::move(attacker), std::move(channels),
                       Prior(std::move(secrets), std::move(probs)),
                       measure_from_json(field(doc, "measure", "game")));
  });
}

LeakageGame load_game(const std::filesystem::path& path) {
  return game_from_json(read_file(path));
}

Json to_json(const crowds::CrowdsConfig& config) {
  Json doc;
  doc["nodes"] = point_array(config.topology.nodes);
  doc["radius"] = round12(config.topology.radius);
  doc["candidates"] = point_array(config.topology.candidates);
  doc["p_f"] = round12(config.p_f);
  return doc;
}

crowds::CrowdsConfig crowds_config_from_json(const Json& doc) {
  return guarded("topology", [&] {
    crowds::CrowdsConfig config;
    const Json& nodes = field(doc, "nodes", "topology");
    if (!nodes.is_array()) throw InputError("topology: 'nodes' must be an array");
    for (const auto& p : nodes) config.topology.nodes.push_back(point_from(p));
    config.topology.radius = field(doc, "radius", "topology").get<double>();
    if (doc.contains("candidates")) {
      for (const auto& p : doc.at("candidates")) {
        config.topology.candidates.push_back(point_from(p));
      }
    }
    if (doc.contains("p_f")) config.p_f = doc.at("p_f").get<double>();
    config.validate();
    return config;
  });
}

Json to_json(const EquilibriumResult& result, double epsilon) {
  Json doc;
  doc["delta_star"] = number_array(result.delta_star.probs());
  doc["value"] = round12(result.value);
  doc["certificate"] = number_array(result.certificate);
  doc["gap_bound"] = round12(result.gap_bound);
  doc["iterations_used"] = result.iterations_used;
  doc["converged"] = result.converged(epsilon);
  return doc;
}

Json to_json(const UtilityTable& table, const LeakageGame& game) {
  Json doc;
  doc["defender_actions"] = game.defender_actions();
  doc["attacker_actions"] = game.attacker_actions();
  doc["values"] = number_matrix(table.values);
  return doc;
}

Json to_json(const GridResult& result) {
  Json doc;
  doc["best_delta"] = number_array(result.best_delta.probs());
  doc["best_value"] = round12(result.best_value);
  doc["resolution"] = round12(result.resolution);
  doc["lipschitz_estimate"] = round12(result.lipschitz_estimate);
  if (result.attacker_maximin) {
    Json m;
    m["best_alpha"] = number_array(result.attacker_maximin->best_alpha.probs());
    m["maximin_value"] = round12(result.attacker_maximin->value);
    doc["attacker_maximin"] = std::move(m);
  }
  return doc;
}

Json to_json(const SaddleReport& report) {
  Json doc;
  doc["pass"] = report.pass;
  doc["f_hat"] = round12(report.f_hat);
  doc["certificate"] = number_array(report.certificate);
  doc["worst_violation"] = round12(report.worst_violation);
  doc["worst_convex_violation"] = round12(report.worst_convex_violation);
  doc["worst_delta"] = number_array(report.worst_delta);
  doc["worst_affine_violation"] = round12(report.worst_affine_violation);
  if (report.lp_value) {
    doc["lp_value"] = round12(*report.lp_value);
    doc["lp_violation"] = round12(*report.lp_violation);
  }
  return doc;
}

std::string render_table(const UtilityTable& table, const LeakageGame& game) {
  std::size_t label_width = 1;
  for (const auto& d : game.defender_actions()) label_width = std::max(label_width, d.size());
  std::size_t cell_width = 10;
  for (const auto& a : game.attacker_actions()) cell_width = std::max(cell_width, a.size() + 1);

  std::ostringstream out;
  out << std::setw(static_cast<int>(label_width)) << "" << " |";
  for (const auto& a : game.attacker_actions()) {
    out << std::setw(static_cast<int>(cell_width)) << a;
  }
  out << '\n'
      << std::string(label_width + 2 + cell_width * game.num_attacker_actions(), '-')
      << '\n';
  out << std::fixed << std::setprecision(6);
  for (std::size_t d = 0; d < game.num_defender_actions(); ++d) {
    out << std::setw(static_cast<int>(label_width)) << game.defender_actions()[d] << " |";
    for (double v : table.values[d]) out << std::setw(static_cast<int>(cell_width)) << v;
    out << '\n';
  }
  return out.str();
}

std::vector<double> delta_from_json(const Json& doc) {
  return guarded("delta", [&]() -> std::vector<double> {
    if (doc.is_array()) return doc.get<std::vector<double>>();
    if (doc.is_object()) {
      if (doc.contains("delta_star")) return doc.at("delta_star").get<std::vector<double>>();
      for (const char* key : {"subgradient", "lp"}) {
        if (doc.contains(key)) return delta_from_json(doc.at(key));
      }
    }
    throw InputError("delta: expected an array or a solve result");
  });
}

}  // namespace leakgame::io
