#include "leakgame/cli.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "leakgame/crowds.h"
#include "leakgame/error.h"
#include "leakgame/examples.h"
#include "leakgame/io.h"
#include "leakgame/oracle.h"
#include "leakgame/sampling.h"
#include "leakgame/solver.h"

namespace leakgame::cli {

namespace {

using io::Json;

constexpr std::uint64_t kDefaultSeed = 1;

void write_trace(const std::string& path, const SubgradientTrace& trace) {
  std::ofstream csv(path);
  if (!csv) throw InputError("cannot write trace '" + path + "'");
  csv << "k,f,f_best,step\n";
  char line[128];
  for (const auto& row : trace) {
    std::snprintf(line, sizeof line, "%ld,%.12g,%.12g,%.12g\n", row.k, row.f,
                  row.f_best, row.step);
    csv << line;
  }
}

int cmd_solve(const std::string& game_path, const SolverConfig& config,
              const std::string& method, const std::string& trace_path,
              std::ostream& out) {
  const LeakageGame game = io::load_game(game_path);
  std::optional<EquilibriumResult> sub;
  std::optional<EquilibriumResult> lp;
  if (method == "subgradient" || method == "both") {
    SubgradientTrace trace;
    sub = solve_minimax(game, config, trace_path.empty() ? nullptr : &trace);
    if (!trace_path.empty()) write_trace(trace_path, trace);
  }
  if (method == "lp" || method == "both") lp = solve_lp_bayes(game);

  Json doc;
  if (sub && lp) {
    doc["subgradient"] = io::to_json(*sub, config.epsilon);
    doc["lp"] = io::to_json(*lp, config.epsilon);
    doc["value_difference"] = io::round12(std::abs(sub->value - lp->value));
  } else {
    doc = io::to_json(sub ? *sub : *lp, config.epsilon);
  }
  doc["defender_actions"] = game.defender_actions();
  doc["attacker_actions"] = game.attacker_actions();
  out << io::dump(doc) << '\n';
  return kSuccess;
}

int cmd_table(const std::string& game_path, std::ostream& out, std::ostream& err) {
  const LeakageGame game = io::load_game(game_path);
  const UtilityTable table = utility_table(game);
  out << io::dump(io::to_json(table, game)) << '\n';
  err << io::render_table(table, game);
  return kSuccess;
}

Json parse_delta_argument(const std::string& raw) {
  try {
    return io::parse(raw);
  } catch (const InputError&) {
    // Not inline JSON; treat it as a path to a JSON document.
    return io::read_file(raw);
  }
}

int cmd_verify(const std::string& game_path, const std::string& delta_arg,
               double epsilon, int samples, std::ostream& out) {
  const LeakageGame game = io::load_game(game_path);
  const auto delta = io::delta_from_json(parse_delta_argument(delta_arg));
  if (delta.size() != game.num_defender_actions()) {
    throw InputError("verify: strategy has " + std::to_string(delta.size()) +
                     " entries for " + std::to_string(game.num_defender_actions()) +
                     " defender actions");
  }
  const SaddleReport report =
      verify_epsilon_saddle(game, MixedStrategy(delta), epsilon, samples,
                            seed_from_env(kDefaultSeed));
  Json doc = io::to_json(report);
  doc["epsilon"] = io::round12(epsilon);
  out << io::dump(doc) << '\n';
  return report.pass ? kSuccess : kVerificationFailed;
}

int cmd_oracle_grid(const std::string& game_path, double resolution, bool maximin,
                    std::ostream& out) {
  const LeakageGame game = io::load_game(game_path);
  out << io::dump(io::to_json(grid_minimax(game, resolution, maximin))) << '\n';
  return kSuccess;
}

int cmd_crowds_build(const std::string& topology_path, const std::string& out_path,
                     std::ostream& out) {
  const auto config = io::crowds_config_from_json(io::read_file(topology_path));
  if (config.topology.candidates.empty()) {
    throw InputError("topology: no candidate locations");
  }
  const LeakageGame game = crowds::case_study_game(config);
  io::write_file(out_path, io::to_json(game));

  Json summary;
  summary["nodes"] = config.topology.nodes.size();
  summary["edges"] = crowds::edge_count(crowds::build_adjacency(config.topology));
  summary["defender_actions"] = game.num_defender_actions();
  summary["attacker_actions"] = game.num_attacker_actions();
  summary["output"] = out_path;
  out << io::dump(summary) << '\n';
  return kSuccess;
}

int report_error(const std::exception& e, int code, std::ostream& out,
                 std::ostream& err) {
  err << "error: " << e.what() << '\n';
  Json doc;
  doc["error"] = e.what();
  doc["exit_code"] = code;
  out << io::dump(doc) << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solve and verify zero-sum information-leakage games", "leakgame"};
  app.require_subcommand(1);

  SolverConfig config;
  std::string game_path;
  std::string method = "subgradient";
  std::string trace_path;
  auto* solve = app.add_subcommand("solve", "Compute the defender's equilibrium strategy");
  solve->add_option("game", game_path, "Game file")->required();
  solve->add_option("--epsilon", config.epsilon, "Target accuracy");
  solve->add_option("--max-iter", config.max_iterations, "Iteration cap");
  solve->add_option("--method", method, "subgradient, lp or both")
      ->check(CLI::IsMember({"subgradient", "lp", "both"}));
  solve->add_option("--trace", trace_path, "Write the iteration trace as CSV");

  auto* table = app.add_subcommand("table", "Utility table of pure profiles");
  table->add_option("game", game_path, "Game file")->required();

  std::string delta_arg;
  double verify_epsilon = 1e-3;
  int samples = kDefaultSaddleSamples;
  auto* verify = app.add_subcommand("verify", "Check the epsilon-saddle property");
  verify->add_option("game", game_path, "Game file")->required();
  verify->add_option("--delta", delta_arg, "JSON array, solve output, or file")->required();
  verify->add_option("--epsilon", verify_epsilon, "Tolerance");
  verify->add_option("--samples", samples, "Random strategies to probe");

  double resolution = 0.01;
  bool maximin = false;
  auto* oracle = app.add_subcommand("oracle", "Brute-force oracles");
  oracle->require_subcommand(1);
  auto* grid = oracle->add_subcommand("grid", "Grid search over the defender simplex");
  grid->add_option("game", game_path, "Game file")->required();
  grid->add_option("--resolution", resolution, "Grid spacing in (0, 0.1]");
  grid->add_flag("--maximin", maximin, "Also search the attacker's grid");

  std::string topology_path;
  std::string out_path;
  auto* crowds_cmd = app.add_subcommand("crowds", "Crowds case-study games");
  crowds_cmd->require_subcommand(1);
  auto* build = crowds_cmd->add_subcommand("build", "Build a game file from a topology");
  build->add_option("topology", topology_path, "Topology file")->required();
  build->add_option("-o,--output", out_path, "Game file to write")->required();

  std::string example_name;
  auto* examples_cmd = app.add_subcommand("examples", "Bundled example games");
  examples_cmd->require_subcommand(1);
  auto* list = examples_cmd->add_subcommand("list", "List bundled games");
  auto* emit = examples_cmd->add_subcommand("emit", "Print a bundled game file");
  emit->add_option("name", example_name, "Example name")->required();

  std::vector<std::string> argv_storage{"leakgame"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (solve->parsed()) return cmd_solve(game_path, config, method, trace_path, out);
    if (table->parsed()) return cmd_table(game_path, out, err);
    if (verify->parsed()) {
      return cmd_verify(game_path, delta_arg, verify_epsilon, samples, out);
    }
    if (grid->parsed()) return cmd_oracle_grid(game_path, resolution, maximin, out);
    if (build->parsed()) return cmd_crowds_build(topology_path, out_path, out);
    if (list->parsed()) {
      out << io::dump(Json(examples::names())) << '\n';
      return kSuccess;
    }
    if (emit->parsed()) {
      out << io::dump(io::to_json(examples::by_name(example_name))) << '\n';
      return kSuccess;
    }
  } catch (const InputError& e) {
    return report_error(e, kInputError, out, err);
  } catch (const ConvexityError& e) {
    return report_error(e, kInputError, out, err);
  } catch (const NumericalError& e) {
    return report_error(e, kNumericalError, out, err);
  } catch (const ModelingError& e) {
    return report_error(e, kNumericalError, out, err);
  }
  return kInputError;
}

}  // namespace leakgame::cli
