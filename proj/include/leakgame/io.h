#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "leakgame/channel.h"
#include "leakgame/crowds.h"
#include "leakgame/game.h"
#include "leakgame/oracle.h"
#include "leakgame/solver.h"
#include "leakgame/vulnerability.h"

namespace leakgame::io {

// Insertion-ordered so emitted documents keep a fixed key order.
using Json = nlohmann::ordered_json;

// Rounds to 12 significant digits; every double written by this module goes
// through it so output is stable across runs.
double round12(double v);

// Parse failures of any kind surface as InputError.
Json parse(const std::string& text);
Json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const Json& doc);
std::string dump(const Json& doc);

// {"inputs": [...], "outputs": [...], "rows": [[...], ...]}
Json to_json(const Channel& channel);
Channel channel_from_json(const Json& doc);

// "bayes" | {"g": {"guesses": [...], "gain": [[...]]}}
Json to_json(const VulnerabilityMeasure& measure);
VulnerabilityMeasure measure_from_json(const Json& doc);

// {"secrets", "prior", "defender_actions", "attacker_actions", "measure",
//  "channels": {"<d>,<a>": channel}}
Json to_json(const LeakageGame& game);
LeakageGame game_from_json(const Json& doc);
LeakageGame load_game(const std::filesystem::path& path);

// {"nodes": [[x, y], ...], "radius": r, "candidates": [[x, y], ...], "p_f": p}
Json to_json(const crowds::CrowdsConfig& config);
crowds::CrowdsConfig crowds_config_from_json(const Json& doc);

Json to_json(const EquilibriumResult& result, double epsilon);
Json to_json(const UtilityTable& table, const LeakageGame& game);
Json to_json(const GridResult& result);
Json to_json(const SaddleReport& report);

// Fixed-width text rendering of a utility table.
std::string render_table(const UtilityTable& table, const LeakageGame& game);

// Accepts a bare array, or a solve result ({"delta_star": [...]}, possibly
// nested under "subgradient" / "lp").
std::vector<double> delta_from_json(const Json& doc);

}  // namespace leakgame::io
