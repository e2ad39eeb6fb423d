#pragma once
#include <string>
#include <vector>

#include <json.hpp>

#include "circlemap/analysis.hpp"
#include "circlemap/catalog.hpp"
#include "circlemap/theodorsen.hpp"

namespace circlemap {

using ordered_json = nlohmann::ordered_json;

struct CheckFlags {
  bool conjugate_identity = true;
  bool total_variation = true;
  bool log_modulus = true;
  bool decay = true;
  bool sobolev = true;
  bool stieltjes = true;

  static CheckFlags from_json(const nlohmann::json& j);
  ordered_json to_json() const;
};

struct ExperimentConfig {
  FunctionSpec function;
  SolverParams solver;
  CheckFlags checks;
  std::string output_dir;       // empty: no files written
  double identity_tol = 1e-8;   // conjugate-identity check tolerance
  double stieltjes_tol = 1e-4;  // pairing-vs-sobolev gap tolerance

  static ExperimentConfig from_json(const nlohmann::json& j);
  ordered_json to_json() const;
};

// Deterministic report payload: same config => byte-identical JSON (the
// caller may add a volatile "timestamp" field before writing; determinism is
// defined on the payload without it).
ordered_json run_experiment(const ExperimentConfig& cfg);

// Also runs the diagnostics on an externally supplied h (no solve).
ordered_json verify_homeomorphism(const ExperimentConfig& cfg, const CircleHomeomorphism& h);

// Rows (N, computed_sup, closed_form) of the Fejer-mean sup-norm table.
ordered_json run_counterexample(const EpsilonRule& rule, const std::vector<int>& n_list, int grid_n);

// Series CSV: columns t, h, f_of_h, conj_f_of_h, residual; n rows + header;
// full double precision (%.17g).
void write_series_csv(const std::string& path, const FunctionSpec& f, const CircleHomeomorphism& h);

// Two-column CSV (t, h) reader; accepts the series format above as well.
CircleHomeomorphism read_h_csv(const std::string& path);

// Report schema identifier embedded in every payload.
extern const char* kReportSchemaVersion;

}  // namespace circlemap
