#pragma once
#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "circlemap/common.hpp"

namespace circlemap {

// epsilon(n) rules for the slowly-decaying sine series. All are positive and
// nonincreasing; inv_log and inv_loglog decrease to zero with divergent
// sum eps(n)/n, const_tail freezes at a positive floor (still divergent).
struct EpsilonRule {
  std::string name = "inv_log";  // inv_log | inv_loglog | const_tail
  double offset = 2.0;
  double floor = 0.05;  // const_tail only

  double eps(long n) const;
  void validate() const;
  static EpsilonRule from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

// Analytic description of a 2*pi-periodic continuous function, evaluable at
// arbitrary points. Canonical JSON form: {"kind": ..., "params": {...}}.
struct FunctionSpec {
  std::string kind;  // trig_poly | lacunary_sin | weierstrass_cos | piecewise_linear | log_radius_of_map

  // trig_poly: sum over terms of a*cos(k t) + b*sin(k t), entries [k, a, b]
  std::vector<std::array<double, 3>> terms;
  // lacunary_sin: sum_{m=1..lac_terms} eps(m)/m * sin(m t)
  EpsilonRule epsilon_rule;
  int lac_terms = 0;
  // weierstrass_cos: sum_{m=0..w_terms-1} a^m cos(b^m t), b a positive integer
  double a = 0.0;
  double b = 0.0;
  int w_terms = 0;
  // piecewise_linear: periodic nodes [[t, v], ...], t ascending in [0, 2*pi)
  std::vector<std::array<double, 2>> nodes;
  // log_radius_of_map: f(theta) = log|1 + beta e^{it}| at t = t(theta), the
  // exact log-radius profile of the image of z + beta z^2
  double beta = 0.0;

  // Internal amplitude multiplier (solver continuation); not serialized.
  double amp_scale = 1.0;

  double eval(double t) const;
  // Pointwise derivative where defined (piecewise_linear: right derivative).
  double deriv(double t) const;
  void validate() const;

  static FunctionSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  static FunctionSpec make_trig_poly(std::vector<std::array<double, 3>> terms);
  static FunctionSpec make_lacunary_sin(EpsilonRule rule, int terms);
  static FunctionSpec make_weierstrass_cos(double a, double b, int terms);
  static FunctionSpec make_piecewise_linear(std::vector<std::array<double, 2>> nodes);
  static FunctionSpec make_log_radius_of_map(double beta);

  // Same function scaled by lambda (used by solver continuation).
  FunctionSpec scaled(double lambda) const;
};

// Batched evaluation (OpenMP-parallel over points; deterministic per point).
std::vector<double> evaluate(const FunctionSpec& spec, const std::vector<double>& points);
std::vector<double> evaluate_deriv(const FunctionSpec& spec, const std::vector<double>& points);

// Names of the supported kinds, in catalog order.
std::vector<std::string> catalog_kinds();

}  // namespace circlemap
