/// @file experiment.hpp
/// @brief Experiment configuration, convergence studies, and report files.
///
/// run_experiment writes, per grid, a monitors CSV (t, energy,
/// divergence_norm), a final snapshot (`x y B1 B2 magnitude`, one row per
/// node, row-major) and a key = value summary; a convergence-table CSV is
/// added when several grids are requested. Numerics are written with 17
/// significant digits so parsing the files recovers the values exactly.

#pragma once

#include <optional>
#include <string>

#include "sbpsat/metrics.hpp"
#include "sbpsat/time_integration.hpp"

namespace sbpsat {

struct ExperimentConfig {
  /// 1, 2 or 3 select the built-in presets; 0 is a fully custom setup.
  int experiment = 0;
  int order = 2;  // 2 or 4
  BcKind bc = BcKind::Dirichlet;
  double epsilon = 0.0;
  /// Nodes per axis; more than one entry runs a convergence study and each
  /// entry must double the previous one.
  std::vector<int> nodes;
  double cfl = 0.5;
  double t_final = 0.0;
  std::array<double, 4> domain{0.0, 1.0, 0.0, 1.0};  // x0 x1 y0 y1
  ForcingSource forcing = ForcingSource::ResidualOracle;
  std::string out_dir;
  int monitor_every = 10;
  double diffusion_safety = 0.9;
  bool with_exact = false;  // compare against the rotating hump

  GridSpec make_grid(int nodes_per_axis) const;
  ModelConfig make_model() const;
  void validate() const;
};

/// Presets: 1 = rotating hump on [-1,1]^2, eps 0.01, mixed conditions, t=2pi;
/// 2 = same problem on [0,1]^2 with Dirichlet conditions; 3 = unforced decay
/// on [-1,1]^2 (divergence study; epsilon defaults to 0.001).
ExperimentConfig experiment_preset(int id);

struct ConvergenceRow {
  int nodes = 0;
  double error = 0.0;
  /// log2(e_prev / e_cur); meaningful from the second row on.
  double rate = 0.0;
};

struct RunReport {
  int nodes = 0;
  double dt = 0.0;
  long steps = 0;
  bool stable = true;
  std::string instability_note;
  std::optional<double> rel_error;  // present when an exact solution exists
  double div_error = 0.0;
  RunMonitors monitors;
  VectorField final_state;
};

/// Integrate one grid of the configured experiment.
RunReport run_single_grid(const ExperimentConfig& config, int nodes_per_axis);

struct StudyResult {
  std::vector<RunReport> runs;
  std::vector<ConvergenceRow> error_rows;       // empty without an exact solution
  std::vector<ConvergenceRow> divergence_rows;
};

/// Run every grid in config.nodes (rejecting non-doubling sequences) and form
/// convergence tables with rate = log2(e_prev / e_cur).
StudyResult convergence_study(const ExperimentConfig& config);

/// Run the configured experiment and write report files under config.out_dir.
/// Returns 0 on success, 2 when a run went unstable.
int run_experiment(const ExperimentConfig& config);

}  // namespace sbpsat
