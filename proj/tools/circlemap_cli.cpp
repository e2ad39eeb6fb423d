// circlemap: solve the boundary-correspondence equation for star-like curves
// and run the conjugate-function diagnostics.
//
// Subcommands: solve, verify, counterexample, ground-truth, catalog.
// Exit codes: 0 success, 2 solver non-convergence, 3 check failure,
//             4 config/input error.
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "circlemap/pipeline.hpp"

namespace {

using circlemap::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitNotConverged = 2;
constexpr int kExitCheckFailed = 3;
constexpr int kExitConfigError = 4;

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw circlemap::InvalidInput("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw circlemap::InvalidInput("cannot open " + path);
  out << text;
  if (!out) throw circlemap::InvalidInput("write failed for " + path);
}

// 0 if converged and every enabled check passed, else 2 or 3.
int report_exit_code(const ordered_json& report) {
  if (!report.at("outcome").at("converged").get<bool>()) return kExitNotConverged;
  for (const auto& [name, check] : report.at("checks").items()) {
    (void)name;
    if (check.is_object() && check.contains("pass") && !check.at("pass").get<bool>())
      return kExitCheckFailed;
  }
  return kExitOk;
}

void emit_report(const ordered_json& report, const std::string& out_dir, bool json_stdout,
                 const std::string& filename) {
  ordered_json stamped = report;
  stamped["timestamp"] = utc_timestamp();
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    write_text(out_dir + "/" + filename, stamped.dump(2) + "\n");
  }
  if (json_stdout) std::cout << stamped.dump(2) << std::endl;
}

void print_solve_summary(const ordered_json& report) {
  const auto& o = report.at("outcome");
  std::printf("n                 : %d\n", report.at("grid").at("n").get<int>());
  std::printf("converged         : %s\n", o.at("converged").get<bool>() ? "yes" : "no");
  std::printf("residual          : %.17g\n", o.at("residual").get<double>());
  std::printf("iterations        : %d\n", o.at("iterations").get<int>());
  std::printf("newton steps      : %d\n", o.at("newton_steps").get<int>());
  std::printf("constant_c        : %.17g\n", o.at("constant_c").get<double>());
  for (const auto& [name, check] : report.at("checks").items()) {
    if (check.is_null()) {
      std::printf("check %-18s: disabled\n", name.c_str());
    } else if (check.contains("pass")) {
      std::printf("check %-18s: %s\n", name.c_str(), check.at("pass").get<bool>() ? "pass" : "FAIL");
    } else {
      std::printf("check %-18s: recorded\n", name.c_str());
    }
  }
}

int run(int argc, char** argv) {
  CLI::App app{"boundary correspondence of star-like curves and conjugate-function diagnostics"};
  app.require_subcommand(1);

  std::string config_path, out_dir, series_path, rule_name = "inv_log";
  int grid = 0;
  bool json_stdout = false;
  double beta = 0.0, rule_offset = 2.0, rule_floor = 0.05;
  std::vector<int> N_list = {16, 64, 256};

  auto add_common = [&](CLI::App* cmd, bool with_config) {
    if (with_config) cmd->add_option("--config", config_path, "ExperimentConfig JSON file")->required();
    cmd->add_option("--out", out_dir, "output directory");
    cmd->add_option("--grid", grid, "grid size n (power of two), overrides config");
    cmd->add_flag("--json", json_stdout, "print the JSON report to stdout");
  };

  CLI::App* solve = app.add_subcommand("solve", "solve h - id = K[f o h] from a config, write report + series");
  add_common(solve, true);

  CLI::App* verify = app.add_subcommand("verify", "run the diagnostics on an existing h series");
  add_common(verify, true);
  verify->add_option("--series", series_path, "CSV with columns t,h (series.csv format accepted)")
      ->required();

  CLI::App* counter = app.add_subcommand("counterexample", "Fejer-mean sup-norm growth table for the conjugate of a slowly-decaying sine series");
  add_common(counter, false);
  counter->add_option("--rule", rule_name, "epsilon rule: inv_log | inv_loglog | const_tail");
  counter->add_option("--offset", rule_offset, "epsilon rule offset (default 2)");
  counter->add_option("--floor", rule_floor, "const_tail floor (default 0.05)");
  counter->add_option("--N", N_list, "ascending Fejer orders (default 16 64 256)");

  CLI::App* ground = app.add_subcommand("ground-truth", "exact boundary-correspondence pair for z + beta z^2");
  add_common(ground, false);
  ground->add_option("--beta", beta, "quadratic coefficient, |beta| <= 0.3")->required();

  CLI::App* catalog = app.add_subcommand("catalog", "list the function kinds");
  catalog->add_flag("--json", json_stdout, "print as a JSON array");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  if (solve->parsed() || verify->parsed()) {
    circlemap::ExperimentConfig cfg = circlemap::ExperimentConfig::from_json(load_json_file(config_path));
    if (grid > 0) cfg.solver.n = grid;
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    cfg.solver.validate();
    ordered_json report;
    if (solve->parsed()) {
      report = circlemap::run_experiment(cfg);
    } else {
      const circlemap::CircleHomeomorphism h = circlemap::read_h_csv(series_path);
      if (grid > 0 && h.n != cfg.solver.n)
        throw circlemap::InvalidInput("verify: --grid does not match the series row count");
      report = circlemap::verify_homeomorphism(cfg, h);
    }
    emit_report(report, cfg.output_dir, json_stdout, "report.json");
    if (!json_stdout) print_solve_summary(report);
    return report_exit_code(report);
  }

  if (counter->parsed()) {
    circlemap::EpsilonRule rule;
    rule.name = rule_name;
    rule.offset = rule_offset;
    rule.floor = rule_floor;
    const int grid_n = grid > 0 ? grid : 4096;
    const ordered_json table = circlemap::run_counterexample(rule, N_list, grid_n);
    emit_report(table, out_dir, json_stdout, "counterexample.json");
    bool ok = true;
    if (!json_stdout) {
      std::printf("%8s %24s %24s\n", "N", "computed_sup", "closed_form");
      for (const auto& row : table.at("rows")) {
        std::printf("%8d %24.17g %24.17g\n", row.at("N").get<int>(),
                    row.at("computed_sup").get<double>(), row.at("closed_form").get<double>());
      }
    }
    for (const auto& row : table.at("rows")) {
      if (std::abs(row.at("computed_sup").get<double>() - row.at("closed_form").get<double>()) > 1e-10)
        ok = false;
    }
    return ok ? kExitOk : kExitCheckFailed;
  }

  if (ground->parsed()) {
    const int n = grid > 0 ? grid : 2048;
    const auto [f, h] = circlemap::synthesize_ground_truth(beta, n);
    const double res = circlemap::residual(f, h);
    ordered_json out;
    out["schema_version"] = circlemap::kReportSchemaVersion;
    out["beta"] = beta;
    out["grid"] = ordered_json{{"n", n}};
    out["function"] = ordered_json(f.to_json());
    out["residual"] = res;
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      circlemap::write_series_csv(out_dir + "/series.csv", f, h);
      out["series_csv"] = "series.csv";
    } else {
      out["series_csv"] = nullptr;
    }
    emit_report(out, out_dir, json_stdout, "ground_truth.json");
    if (!json_stdout)
      std::printf("beta %.17g  n %d  residual %.17g  (series %s)\n", beta, n, res,
                  out_dir.empty() ? "not written" : (out_dir + "/series.csv").c_str());
    return kExitOk;
  }

  // catalog
  const auto kinds = circlemap::catalog_kinds();
  if (json_stdout) {
    std::cout << ordered_json(kinds).dump(2) << std::endl;
  } else {
    for (const auto& k : kinds) std::cout << k << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const circlemap::InvalidInput& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitConfigError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << std::endl;
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitConfigError;
  }
}
