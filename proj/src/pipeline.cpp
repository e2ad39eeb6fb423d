#include "circlemap/pipeline.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "circlemap/conjugation.hpp"
#include "circlemap/monotone.hpp"

namespace circlemap {

const char* kReportSchemaVersion = "1";

namespace {

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / double(v.size());
}

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// The diagnostics shared by run_experiment and verify_homeomorphism.
ordered_json run_checks(const ExperimentConfig& cfg, const CircleHomeomorphism& h) {
  const int n = h.n;
  const std::vector<double> pts(h.lift.begin(), h.lift.begin() + n);
  const std::vector<double> g = evaluate(cfg.function, pts);
  const std::vector<double> Kg = conjugate_grid_values(g);
  const std::vector<double> u = h.u();
  const double m = mean_of(u);
  const GridFunction g_grid = GridFunction::from_real(g);
  const GridFunction kg_grid = GridFunction::from_real(Kg);
  const GridFunction u_grid = GridFunction::from_real(u);

  ordered_json checks;
  if (cfg.checks.conjugate_identity) {
    double err = 0.0;
    for (int j = 0; j < n; ++j) err = std::max(err, std::abs(u[j] - m - Kg[j]));
    checks["conjugate_identity"] = ordered_json{
        {"sup_error", err}, {"tol", cfg.identity_tol}, {"pass", err <= cfg.identity_tol}};
  } else {
    checks["conjugate_identity"] = nullptr;
  }
  if (cfg.checks.total_variation) {
    const double tv_u = total_variation(u_grid);
    const double tv_conj = total_variation(kg_grid);
    const double bound = 4.0 * kPi + 1e-9;
    checks["total_variation"] = ordered_json{{"tv_h_minus_id", tv_u},
                                             {"tv_conjugate", tv_conj},
                                             {"bound", bound},
                                             {"pass", tv_u <= bound}};
  } else {
    checks["total_variation"] = nullptr;
  }
  if (cfg.checks.log_modulus) {
    checks["log_modulus"] = ordered_json{{"statistic", log_modulus_statistic(h)}};
  } else {
    checks["log_modulus"] = nullptr;
  }
  if (cfg.checks.decay || cfg.checks.sobolev || cfg.checks.stieltjes) {
    const FourierSeries spec = analyze(g_grid);
    if (cfg.checks.decay) {
      const DecayProfile prof = decay_profile(spec);
      checks["decay"] =
          ordered_json{{"band_max", prof.band_max}, {"global_sup", prof.global_sup}};
    } else {
      checks["decay"] = nullptr;
    }
    if (cfg.checks.sobolev) {
      checks["sobolev"] = ordered_json{{"sobolev_half", sobolev_half(spec)},
                                       {"band_partials", sobolev_band_partials(spec)}};
    } else {
      checks["sobolev"] = nullptr;
    }
    if (cfg.checks.stieltjes) {
      const double pairing = stieltjes_pairing(g_grid, kg_grid);
      const double sob = sobolev_half(spec);
      const double gap = std::abs(pairing - sob);
      checks["stieltjes"] = ordered_json{{"pairing", pairing},
                                         {"sobolev_half", sob},
                                         {"gap", gap},
                                         {"tol", cfg.stieltjes_tol},
                                         {"pass", gap <= cfg.stieltjes_tol}};
    } else {
      checks["stieltjes"] = nullptr;
    }
  } else {
    checks["decay"] = nullptr;
    checks["sobolev"] = nullptr;
    checks["stieltjes"] = nullptr;
  }
  return checks;
}

ordered_json outcome_json(const SolveOutcome& o) {
  return ordered_json{{"residual", o.residual},
                      {"iterations", o.iterations},
                      {"converged", o.converged},
                      {"constant_c", o.constant_c},
                      {"raw_monotone", o.raw_monotone},
                      {"raw_residual", o.raw_residual},
                      {"raw_min_slope", o.raw_min_slope},
                      {"newton_steps", o.newton_steps}};
}

ordered_json assemble_report(const ExperimentConfig& cfg, const ordered_json& outcome,
                             const CircleHomeomorphism& h, bool series_written) {
  ordered_json report;
  report["schema_version"] = kReportSchemaVersion;
  report["config"] = cfg.to_json();
  report["grid"] = ordered_json{{"n", h.n}};
  report["outcome"] = outcome;
  report["checks"] = run_checks(cfg, h);
  if (series_written)
    report["series_csv"] = "series.csv";
  else
    report["series_csv"] = nullptr;
  return report;
}

}  // namespace

CheckFlags CheckFlags::from_json(const nlohmann::json& j) {
  CheckFlags c;
  if (j.contains("conjugate_identity")) c.conjugate_identity = j.at("conjugate_identity").get<bool>();
  if (j.contains("total_variation")) c.total_variation = j.at("total_variation").get<bool>();
  if (j.contains("log_modulus")) c.log_modulus = j.at("log_modulus").get<bool>();
  if (j.contains("decay")) c.decay = j.at("decay").get<bool>();
  if (j.contains("sobolev")) c.sobolev = j.at("sobolev").get<bool>();
  if (j.contains("stieltjes")) c.stieltjes = j.at("stieltjes").get<bool>();
  return c;
}

ordered_json CheckFlags::to_json() const {
  return ordered_json{{"conjugate_identity", conjugate_identity},
                      {"total_variation", total_variation},
                      {"log_modulus", log_modulus},
                      {"decay", decay},
                      {"sobolev", sobolev},
                      {"stieltjes", stieltjes}};
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
  ExperimentConfig cfg;
  cfg.function = FunctionSpec::from_json(j.at("function"));
  if (j.contains("solver")) {
    const auto& s = j.at("solver");
    if (s.contains("n")) cfg.solver.n = s.at("n").get<int>();
    if (s.contains("damping")) cfg.solver.damping = s.at("damping").get<double>();
    if (s.contains("tol")) cfg.solver.tol = s.at("tol").get<double>();
    if (s.contains("max_iter")) cfg.solver.max_iter = s.at("max_iter").get<int>();
    if (s.contains("continuation_steps"))
      cfg.solver.continuation_steps = s.at("continuation_steps").get<int>();
  }
  if (j.contains("checks")) cfg.checks = CheckFlags::from_json(j.at("checks"));
  if (j.contains("output_dir")) cfg.output_dir = j.at("output_dir").get<std::string>();
  if (j.contains("identity_tol")) cfg.identity_tol = j.at("identity_tol").get<double>();
  if (j.contains("stieltjes_tol")) cfg.stieltjes_tol = j.at("stieltjes_tol").get<double>();
  cfg.solver.validate();
  if (!(cfg.identity_tol > 0.0) || !(cfg.stieltjes_tol > 0.0))
    throw InvalidInput("ExperimentConfig: tolerances must be positive");
  return cfg;
}

ordered_json ExperimentConfig::to_json() const {
  return ordered_json{{"function", ordered_json(function.to_json())},
                      {"solver", ordered_json{{"n", solver.n},
                                              {"damping", solver.damping},
                                              {"tol", solver.tol},
                                              {"max_iter", solver.max_iter},
                                              {"continuation_steps", solver.continuation_steps}}},
                      {"checks", checks.to_json()},
                      {"output_dir", output_dir},
                      {"identity_tol", identity_tol},
                      {"stieltjes_tol", stieltjes_tol}};
}

ordered_json run_experiment(const ExperimentConfig& cfg) {
  cfg.function.validate();
  cfg.solver.validate();
  const SolveOutcome outcome = solve_boundary_correspondence(cfg.function, cfg.solver);
  const bool write_files = !cfg.output_dir.empty();
  if (write_files) {
    std::filesystem::create_directories(cfg.output_dir);
    write_series_csv(cfg.output_dir + "/series.csv", cfg.function, outcome.h);
  }
  return assemble_report(cfg, outcome_json(outcome), outcome.h, write_files);
}

ordered_json verify_homeomorphism(const ExperimentConfig& cfg, const CircleHomeomorphism& h) {
  cfg.function.validate();
  h.validate();
  const double res = residual(cfg.function, h);
  SolveOutcome o;
  o.h = h;
  o.residual = res;
  o.iterations = 0;
  o.converged = res <= cfg.solver.tol;
  o.constant_c = -mean_of(h.u());
  o.raw_monotone = true;
  o.raw_residual = res;
  o.raw_min_slope = h.min_relative_slope();
  o.newton_steps = 0;
  return assemble_report(cfg, outcome_json(o), h, false);
}

ordered_json run_counterexample(const EpsilonRule& rule, const std::vector<int>& n_list, int grid_n) {
  rule.validate();
  if (n_list.empty()) throw InvalidInput("run_counterexample: empty N list");
  for (size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 2) throw InvalidInput("run_counterexample: each N must be >= 2");
    if (i > 0 && n_list[i] <= n_list[i - 1])
      throw InvalidInput("run_counterexample: N list must be ascending");
  }
  ordered_json table;
  table["schema_version"] = kReportSchemaVersion;
  table["rule"] = ordered_json(rule.to_json());
  table["grid_n"] = grid_n;
  table["rows"] = ordered_json::array();
  for (int N : n_list) {
    const auto [computed, closed] = fejer_conjugate_sup(rule, N, grid_n);
    table["rows"].push_back(
        ordered_json{{"N", N}, {"computed_sup", computed}, {"closed_form", closed}});
  }
  return table;
}

void write_series_csv(const std::string& path, const FunctionSpec& f, const CircleHomeomorphism& h) {
  const int n = h.n;
  const std::vector<double> t = grid_nodes(n);
  const std::vector<double> pts(h.lift.begin(), h.lift.begin() + n);
  const std::vector<double> g = evaluate(f, pts);
  const std::vector<double> Kg = conjugate_grid_values(g);
  const std::vector<double> u = h.u();
  const double m = mean_of(u);
  std::ofstream out(path);
  if (!out) throw InvalidInput("write_series_csv: cannot open " + path);
  out << "t,h,f_of_h,conj_f_of_h,residual\n";
  for (int j = 0; j < n; ++j) {
    out << fmt17(t[j]) << ',' << fmt17(h.lift[j]) << ',' << fmt17(g[j]) << ',' << fmt17(Kg[j])
        << ',' << fmt17(std::abs(u[j] - m - Kg[j])) << '\n';
  }
  if (!out) throw InvalidInput("write_series_csv: write failed for " + path);
}

CircleHomeomorphism read_h_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("read_h_csv: cannot open " + path);
  std::vector<double> tcol, hcol;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const char c = line[0];
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.')) continue;
    std::istringstream row(line);
    std::string cell;
    double vals[2];
    for (int q = 0; q < 2; ++q) {
      if (!std::getline(row, cell, ',')) throw InvalidInput("read_h_csv: row with fewer than 2 columns");
      vals[q] = std::stod(cell);
    }
    tcol.push_back(vals[0]);
    hcol.push_back(vals[1]);
  }
  const int n = static_cast<int>(tcol.size());
  if (!is_power_of_two(n) || n < 16)
    throw InvalidInput("read_h_csv: row count must be a power of two >= 16");
  std::vector<double> u(n);
  for (int j = 0; j < n; ++j) {
    const double tj = kTwoPi * j / n;
    if (std::abs(tcol[j] - tj) > 1e-9)
      throw InvalidInput("read_h_csv: t column does not match the canonical grid");
    u[j] = hcol[j] - tj;
  }
  return CircleHomeomorphism::from_u(u);
}

}  // namespace circlemap
