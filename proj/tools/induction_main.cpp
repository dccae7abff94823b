// Command-line driver for the induction-equation experiments.
//
//   induction run --experiment 1 --order 4 --nodes 40,80,160 --out results/
//
// A config file with `key = value` lines (same keys as the long options) can
// be passed via --config; explicit flags override file values.

#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sbpsat/experiment.hpp"

using namespace sbpsat;

namespace {

struct RawSettings {
  std::optional<int> experiment;
  std::optional<int> order;
  std::optional<std::vector<int>> nodes;
  std::optional<double> epsilon;
  std::optional<double> cfl;
  std::optional<double> tfinal;
  std::optional<std::string> bc;
  std::optional<std::string> forcing;
  std::optional<std::string> out;
};

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<int> parse_nodes(const std::string& text) {
  std::vector<int> nodes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) nodes.push_back(std::stoi(item));
  }
  return nodes;
}

RawSettings read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
  RawSettings raw;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--config",
                                 "line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "experiment") raw.experiment = std::stoi(value);
    else if (key == "order") raw.order = std::stoi(value);
    else if (key == "nodes") raw.nodes = parse_nodes(value);
    else if (key == "epsilon") raw.epsilon = std::stod(value);
    else if (key == "cfl") raw.cfl = std::stod(value);
    else if (key == "tfinal") raw.tfinal = std::stod(value);
    else if (key == "bc") raw.bc = value;
    else if (key == "forcing") raw.forcing = value;
    else if (key == "out") raw.out = value;
    else
      throw CLI::ValidationError("--config", "unknown key '" + key + "'");
  }
  return raw;
}

void overlay(RawSettings& base, const RawSettings& top) {
  if (top.experiment) base.experiment = top.experiment;
  if (top.order) base.order = top.order;
  if (top.nodes) base.nodes = top.nodes;
  if (top.epsilon) base.epsilon = top.epsilon;
  if (top.cfl) base.cfl = top.cfl;
  if (top.tfinal) base.tfinal = top.tfinal;
  if (top.bc) base.bc = top.bc;
  if (top.forcing) base.forcing = top.forcing;
  if (top.out) base.out = top.out;
}

ExperimentConfig materialize(const RawSettings& raw) {
  ExperimentConfig config;
  if (raw.experiment) config = experiment_preset(*raw.experiment);
  if (raw.order) config.order = *raw.order;
  if (raw.nodes) config.nodes = *raw.nodes;
  if (raw.epsilon) config.epsilon = *raw.epsilon;
  if (raw.cfl) config.cfl = *raw.cfl;
  if (raw.tfinal) config.t_final = *raw.tfinal;
  if (raw.bc) {
    if (*raw.bc == "dirichlet") config.bc = BcKind::Dirichlet;
    else if (*raw.bc == "mixed") config.bc = BcKind::Mixed;
    else throw CLI::ValidationError("--bc", "expected dirichlet or mixed");
  }
  if (raw.forcing) {
    if (*raw.forcing == "none") config.forcing = ForcingSource::None;
    else if (*raw.forcing == "printed") config.forcing = ForcingSource::Printed;
    else if (*raw.forcing == "oracle") config.forcing = ForcingSource::ResidualOracle;
    else throw CLI::ValidationError("--forcing", "expected oracle, printed or none");
  }
  if (raw.out) config.out_dir = *raw.out;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SBP-SAT finite-difference solver for the resistive magnetic "
               "induction equations"};
  app.require_subcommand(1);

  CLI::App* run = app.add_subcommand("run", "run an experiment or convergence study");
  RawSettings cli;
  std::string config_path;
  int experiment = 0, order = 0;
  std::string nodes_text, bc_text, forcing_text, out_dir;
  double epsilon = 0.0, cfl = 0.0, tfinal = 0.0;

  CLI::Option* oexp = run->add_option("--experiment", experiment,
                                      "experiment preset: 1, 2 or 3")->check(CLI::Range(1, 3));
  CLI::Option* oorder = run->add_option("--order", order, "interior order: 2 or 4");
  CLI::Option* onodes = run->add_option("--nodes", nodes_text,
                                        "nodes per axis, comma separated for a study");
  CLI::Option* oeps = run->add_option("--epsilon", epsilon, "resistivity");
  CLI::Option* ocfl = run->add_option("--cfl", cfl, "Courant number in (0, 1]");
  CLI::Option* otfinal = run->add_option("--tfinal", tfinal, "end time");
  CLI::Option* obc = run->add_option("--bc", bc_text, "boundary conditions: dirichlet | mixed");
  CLI::Option* oforcing =
      run->add_option("--forcing", forcing_text, "forcing source: oracle | printed | none");
  CLI::Option* oout = run->add_option("--out", out_dir, "output directory");
  run->add_option("--config", config_path, "key = value config file; flags override it");

  CLI11_PARSE(app, argc, argv);

  try {
    RawSettings raw;
    if (!config_path.empty()) raw = read_config_file(config_path);
    if (*oexp) cli.experiment = experiment;
    if (*oorder) cli.order = order;
    if (*onodes) cli.nodes = parse_nodes(nodes_text);
    if (*oeps) cli.epsilon = epsilon;
    if (*ocfl) cli.cfl = cfl;
    if (*otfinal) cli.tfinal = tfinal;
    if (*obc) cli.bc = bc_text;
    if (*oforcing) cli.forcing = forcing_text;
    if (*oout) cli.out = out_dir;
    overlay(raw, cli);

    const ExperimentConfig config = materialize(raw);
    return run_experiment(config);
  } catch (const CLI::Error& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return 1;
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return 1;
  }
}
