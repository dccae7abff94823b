#include "sbpsat/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "sbpsat/model.hpp"

namespace sbpsat {

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string bc_name(BcKind bc) { return bc == BcKind::Dirichlet ? "dirichlet" : "mixed"; }

std::string forcing_name(ForcingSource f) {
  switch (f) {
    case ForcingSource::None: return "none";
    case ForcingSource::Printed: return "printed";
    default: return "oracle";
  }
}

}  // namespace

GridSpec ExperimentConfig::make_grid(int nodes_per_axis) const {
  return GridSpec::rectangle(nodes_per_axis, nodes_per_axis, domain[0], domain[1],
                             domain[2], domain[3]);
}

ModelConfig ExperimentConfig::make_model() const {
  ModelConfig model;
  model.velocity = rotation_velocity();
  model.epsilon = epsilon;
  model.bc_kind = bc;
  if (with_exact) model.exact = rotating_hump_solution();
  return model;
}

void ExperimentConfig::validate() const {
  if (order != 2 && order != 4)
    throw std::invalid_argument("experiment: order must be 2 or 4");
  if (nodes.empty()) throw std::invalid_argument("experiment: no grid sizes given");
  if (t_final < 0.0) throw std::invalid_argument("experiment: tfinal must be >= 0");
  if (cfl <= 0.0 || cfl > 1.0) throw std::invalid_argument("experiment: cfl must be in (0, 1]");
  if (bc == BcKind::Mixed && epsilon <= 0.0)
    throw std::invalid_argument("experiment: mixed conditions require epsilon > 0");
  if (forcing == ForcingSource::ResidualOracle && !with_exact)
    throw std::invalid_argument("experiment: oracle forcing requires the exact solution");
  if (domain[1] <= domain[0] || domain[3] <= domain[2])
    throw std::invalid_argument("experiment: empty domain");
}

ExperimentConfig experiment_preset(int id) {
  ExperimentConfig c;
  c.experiment = id;
  c.cfl = 0.5;
  c.t_final = 2.0 * std::numbers::pi;
  switch (id) {
    case 1:
      c.domain = {-1.0, 1.0, -1.0, 1.0};
      c.bc = BcKind::Mixed;
      c.epsilon = 0.01;
      c.forcing = ForcingSource::ResidualOracle;
      c.with_exact = true;
      break;
    case 2:
      c.domain = {0.0, 1.0, 0.0, 1.0};
      c.bc = BcKind::Dirichlet;
      c.epsilon = 0.01;
      c.forcing = ForcingSource::ResidualOracle;
      c.with_exact = true;
      break;
    case 3:
      c.domain = {-1.0, 1.0, -1.0, 1.0};
      c.bc = BcKind::Dirichlet;
      c.epsilon = 0.001;
      c.forcing = ForcingSource::None;
      c.with_exact = false;
      break;
    default:
      throw std::invalid_argument("experiment_preset: id must be 1, 2 or 3");
  }
  return c;
}

RunReport run_single_grid(const ExperimentConfig& config, int nodes_per_axis) {
  config.validate();
  const GridSpec grid = config.make_grid(nodes_per_axis);
  const OperatorSet ops = make_operators(grid, config.order);
  const ModelConfig model = config.make_model();
  const SchemeKind kind = config.bc == BcKind::Dirichlet ? SchemeKind::DirichletResistive
                                                         : SchemeKind::MixedResistive;

  StepControl control;
  control.cfl = config.cfl;
  control.t_final = config.t_final;
  control.diffusion_safety = config.diffusion_safety;
  control.monitor_every = config.monitor_every;

  RunReport report;
  report.nodes = nodes_per_axis;
  const VectorField v0 = initial_hump(grid);
  try {
    IntegrateResult res = integrate(v0, model, grid, ops, kind, config.forcing, control);
    report.dt = res.dt;
    report.steps = res.steps;
    report.monitors = std::move(res.monitors);
    report.final_state = std::move(res.state);
  } catch (const InstabilityError& err) {
    report.stable = false;
    report.instability_note = err.what();
    report.final_state = VectorField(grid);
    return report;
  }

  report.div_error = divergence_error(ops, report.final_state);
  if (config.with_exact) {
    const VectorField exact = exact_rotating_hump(config.t_final, grid);
    report.rel_error = relative_percentage_error(report.final_state, exact);
  }
  return report;
}

StudyResult convergence_study(const ExperimentConfig& config) {
  config.validate();
  if (config.nodes.size() < 2)
    throw std::invalid_argument("convergence_study: need at least 2 grids");
  for (std::size_t i = 1; i < config.nodes.size(); ++i)
    if (config.nodes[i] != 2 * config.nodes[i - 1])
      throw std::invalid_argument("convergence_study: grids must double the node count");

  StudyResult study;
  for (int n : config.nodes) study.runs.push_back(run_single_grid(config, n));

  auto rows_from = [&](auto&& metric) {
    std::vector<ConvergenceRow> rows;
    for (std::size_t i = 0; i < study.runs.size(); ++i) {
      ConvergenceRow row;
      row.nodes = study.runs[i].nodes;
      row.error = metric(study.runs[i]);
      row.rate = i == 0 ? 0.0 : std::log2(rows[i - 1].error / row.error);
      rows.push_back(row);
    }
    return rows;
  };
  if (config.with_exact)
    study.error_rows = rows_from([](const RunReport& r) { return r.rel_error.value_or(
        std::numeric_limits<double>::quiet_NaN()); });
  study.divergence_rows = rows_from([](const RunReport& r) { return r.div_error; });
  return study;
}

namespace {

namespace fs = std::filesystem;

void write_monitors(const fs::path& path, const RunMonitors& monitors) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "t,energy,divergence_norm\n";
  for (const MonitorSample& s : monitors.samples)
    out << fmt17(s.t) << ',' << fmt17(s.energy) << ',' << fmt17(s.divergence_norm) << '\n';
}

void write_snapshot(const fs::path& path, const VectorField& v) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "x y B1 B2 magnitude\n";
  const GridSpec& grid = v.grid();
  const int n = grid.axis(0).nodes, m = grid.axis(1).nodes;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      const std::size_t idx = grid.index(i, j);
      const double b1 = v[0][idx], b2 = v[1][idx];
      out << fmt17(grid.axis(0).coord(i)) << ' ' << fmt17(grid.axis(1).coord(j)) << ' '
          << fmt17(b1) << ' ' << fmt17(b2) << ' ' << fmt17(std::sqrt(b1 * b1 + b2 * b2))
          << '\n';
    }
  }
}

void write_summary(const fs::path& path, const ExperimentConfig& config,
                   const RunReport& report) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "experiment = " << config.experiment << '\n';
  out << "order = " << config.order << '\n';
  out << "nodes = " << report.nodes << '\n';
  out << "epsilon = " << fmt17(config.epsilon) << '\n';
  out << "bc = " << bc_name(config.bc) << '\n';
  out << "forcing = " << forcing_name(config.forcing) << '\n';
  out << "cfl = " << fmt17(config.cfl) << '\n';
  out << "tfinal = " << fmt17(config.t_final) << '\n';
  out << "dt = " << fmt17(report.dt) << '\n';
  out << "steps = " << report.steps << '\n';
  out << "status = " << (report.stable ? "ok" : "unstable") << '\n';
  if (!report.stable) out << "note = " << report.instability_note << '\n';
  if (report.rel_error) out << "error = " << fmt17(*report.rel_error) << '\n';
  out << "divergence_error = " << fmt17(report.div_error) << '\n';
}

void write_convergence_csv(const fs::path& path, const StudyResult& study) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "nodes,error,rate,divergence_error,divergence_rate\n";
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < study.divergence_rows.size(); ++i) {
    const bool has_err = i < study.error_rows.size();
    out << study.divergence_rows[i].nodes << ','
        << fmt17(has_err ? study.error_rows[i].error : nan) << ','
        << fmt17(has_err && i > 0 ? study.error_rows[i].rate : (i == 0 ? 0.0 : nan)) << ','
        << fmt17(study.divergence_rows[i].error) << ','
        << fmt17(i > 0 ? study.divergence_rows[i].rate : 0.0) << '\n';
  }
}

void print_report_line(const RunReport& report) {
  std::printf("  %4dx%-4d  dt=%-12.4e steps=%-8ld %s", report.nodes, report.nodes,
              report.dt, report.steps, report.stable ? "" : "UNSTABLE ");
  if (report.rel_error) std::printf(" error=%.4e", *report.rel_error);
  std::printf(" div=%.4e\n", report.div_error);
}

void print_study_table(const StudyResult& study, bool with_exact) {
  if (with_exact) {
    std::printf("  %-10s %-12s %-6s %-12s %-6s\n", "Grid", "error", "rate", "div error",
                "rate");
    for (std::size_t i = 0; i < study.error_rows.size(); ++i) {
      const auto& er = study.error_rows[i];
      const auto& dr = study.divergence_rows[i];
      if (i == 0)
        std::printf("  %4dx%-5d %-12.4e %-6s %-12.4e %-6s\n", er.nodes, er.nodes, er.error,
                    "-", dr.error, "-");
      else
        std::printf("  %4dx%-5d %-12.4e %-6.1f %-12.4e %-6.1f\n", er.nodes, er.nodes,
                    er.error, er.rate, dr.error, dr.rate);
    }
    return;
  }
  std::printf("  %-10s %-12s %-6s\n", "Grid", "div error", "rate");
  for (std::size_t i = 0; i < study.divergence_rows.size(); ++i) {
    const auto& dr = study.divergence_rows[i];
    if (i == 0)
      std::printf("  %4dx%-5d %-12.4e %-6s\n", dr.nodes, dr.nodes, dr.error, "-");
    else
      std::printf("  %4dx%-5d %-12.4e %-6.1f\n", dr.nodes, dr.nodes, dr.error, dr.rate);
  }
}

void write_run_files(const fs::path& dir, const ExperimentConfig& config,
                     const RunReport& report) {
  fs::create_directories(dir);
  if (report.stable) {
    write_monitors(dir / "monitors.csv", report.monitors);
    write_snapshot(dir / "snapshot.txt", report.final_state);
  }
  write_summary(dir / "summary.txt", config, report);
}

}  // namespace

int run_experiment(const ExperimentConfig& config) {
  config.validate();
  if (config.out_dir.empty())
    throw std::invalid_argument("run_experiment: no output directory configured");
  const fs::path out_dir(config.out_dir);
  fs::create_directories(out_dir);

  if (config.nodes.size() == 1) {
    const RunReport report = run_single_grid(config, config.nodes.front());
    write_run_files(out_dir, config, report);
    print_report_line(report);
    return report.stable ? 0 : 2;
  }

  const StudyResult study = convergence_study(config);
  bool all_stable = true;
  for (const RunReport& report : study.runs) {
    char sub[32];
    std::snprintf(sub, sizeof(sub), "n%04d", report.nodes);
    write_run_files(out_dir / sub, config, report);
    all_stable = all_stable && report.stable;
  }
  write_convergence_csv(out_dir / "convergence.csv", study);
  print_study_table(study, config.with_exact);
  return all_stable ? 0 : 2;
}

}  // namespace sbpsat
