#include "circlemap/catalog.hpp"

#include <cmath>

namespace circlemap {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw InvalidInput(msg);
}

double wrap_angle(double t) {
  double tb = std::fmod(t, kTwoPi);
  if (tb < 0) tb += kTwoPi;
  return tb;
}

bool is_integer(double x) { return x == std::floor(x); }

// --- log_radius_of_map internals: G(z) = z + beta z^2 on the unit circle has
// boundary angle theta(t) = t + atan2(beta sin t, 1 + beta cos t) and radius
// rho(t) = |1 + beta e^{it}|. f(theta) = log rho(t(theta)).

double theta_of_t(double beta, double t) {
  return t + std::atan2(beta * std::sin(t), 1.0 + beta * std::cos(t));
}

double dtheta_dt(double beta, double t) {
  const double c = std::cos(t);
  const double denom = 1.0 + 2.0 * beta * c + beta * beta;
  return 1.0 + (beta * c + beta * beta) / denom;
}

double t_of_theta(double beta, double theta) {
  double t = theta;
  for (int it = 0; it < 60; ++it) {
    const double r = theta_of_t(beta, t) - theta;
    if (std::abs(r) < 1e-15) break;
    t -= r / dtheta_dt(beta, t);
  }
  return t;
}

double log_rho(double beta, double t) {
  return 0.5 * std::log(1.0 + 2.0 * beta * std::cos(t) + beta * beta);
}

}  // namespace

double EpsilonRule::eps(long n) const {
  if (name == "inv_log") return 1.0 / std::log(double(n) + offset);
  if (name == "inv_loglog") return 1.0 / std::log(std::log(double(n) + offset));
  if (name == "const_tail") return std::max(1.0 / std::log(double(n) + offset), floor);
  throw InvalidInput("EpsilonRule: unknown rule '" + name + "'");
}

void EpsilonRule::validate() const {
  require(name == "inv_log" || name == "inv_loglog" || name == "const_tail",
          "EpsilonRule: unknown rule '" + name + "'");
  if (name == "inv_log" || name == "const_tail") {
    require(1.0 + offset > 1.0, "EpsilonRule: offset must make log(1 + offset) positive");
  } else {
    require(std::log(1.0 + offset) > 1.0, "EpsilonRule: inv_loglog needs log(log(1 + offset)) > 0");
  }
  if (name == "const_tail") require(floor > 0.0, "EpsilonRule: const_tail floor must be positive");
  require(eps(1) > 0.0 && std::isfinite(eps(1)), "EpsilonRule: eps(1) not positive finite");
}

EpsilonRule EpsilonRule::from_json(const nlohmann::json& j) {
  EpsilonRule r;
  r.name = j.at("name").get<std::string>();
  if (j.contains("offset")) r.offset = j.at("offset").get<double>();
  if (j.contains("floor")) r.floor = j.at("floor").get<double>();
  r.validate();
  return r;
}

nlohmann::json EpsilonRule::to_json() const {
  nlohmann::json j{{"name", name}, {"offset", offset}};
  if (name == "const_tail") j["floor"] = floor;
  return j;
}

double FunctionSpec::eval(double t) const {
  double s = 0.0;
  if (kind == "trig_poly") {
    for (const auto& term : terms) {
      s += term[1] * std::cos(term[0] * t) + term[2] * std::sin(term[0] * t);
    }
  } else if (kind == "lacunary_sin") {
    for (int m = 1; m <= lac_terms; ++m) {
      s += epsilon_rule.eps(m) / m * std::sin(m * t);
    }
  } else if (kind == "weierstrass_cos") {
    double am = 1.0;
    double bm = 1.0;
    for (int m = 0; m < w_terms; ++m) {
      s += am * std::cos(bm * t);
      am *= a;
      bm *= b;
    }
  } else if (kind == "piecewise_linear") {
    const double tb = wrap_angle(t);
    const int m = static_cast<int>(nodes.size());
    int i = m - 1;  // last node with nodes[i][0] <= tb (nodes[0][0] may exceed tb: wrap)
    for (int q = 0; q < m; ++q) {
      if (nodes[q][0] <= tb) i = q;
    }
    const double t0 = nodes[i][0] <= tb ? nodes[i][0] : nodes[i][0] - kTwoPi;
    const double v0 = nodes[i][1];
    const int inext = (i + 1) % m;
    const double t1 = inext == 0 ? nodes[0][0] + kTwoPi : nodes[inext][0];
    const double v1 = nodes[inext][1];
    s = t1 == t0 ? v0 : v0 + (v1 - v0) * (tb - t0) / (t1 - t0);
  } else if (kind == "log_radius_of_map") {
    s = log_rho(beta, t_of_theta(beta, t));
  } else {
    throw InvalidInput("FunctionSpec: unknown kind '" + kind + "'");
  }
  return amp_scale * s;
}

double FunctionSpec::deriv(double t) const {
  double s = 0.0;
  if (kind == "trig_poly") {
    for (const auto& term : terms) {
      s += -term[1] * term[0] * std::sin(term[0] * t) + term[2] * term[0] * std::cos(term[0] * t);
    }
  } else if (kind == "lacunary_sin") {
    for (int m = 1; m <= lac_terms; ++m) {
      s += epsilon_rule.eps(m) * std::cos(m * t);
    }
  } else if (kind == "weierstrass_cos") {
    double am = 1.0;
    double bm = 1.0;
    for (int m = 0; m < w_terms; ++m) {
      s -= am * bm * std::sin(bm * t);
      am *= a;
      bm *= b;
    }
  } else if (kind == "piecewise_linear") {
    const double tb = wrap_angle(t);
    const int m = static_cast<int>(nodes.size());
    int i = m - 1;
    for (int q = 0; q < m; ++q) {
      if (nodes[q][0] <= tb) i = q;
    }
    const double t0 = nodes[i][0] <= tb ? nodes[i][0] : nodes[i][0] - kTwoPi;
    const int inext = (i + 1) % m;
    const double t1 = inext == 0 ? nodes[0][0] + kTwoPi : nodes[inext][0];
    s = t1 == t0 ? 0.0 : (nodes[inext][1] - nodes[i][1]) / (t1 - t0);
  } else if (kind == "log_radius_of_map") {
    const double tt = t_of_theta(beta, t);
    const double drho = -beta * std::sin(tt) / (1.0 + 2.0 * beta * std::cos(tt) + beta * beta);
    s = drho / dtheta_dt(beta, tt);
  } else {
    throw InvalidInput("FunctionSpec: unknown kind '" + kind + "'");
  }
  return amp_scale * s;
}

void FunctionSpec::validate() const {
  if (kind == "trig_poly") {
    for (const auto& term : terms) {
      require(term[0] >= 0 && is_integer(term[0]), "trig_poly: frequency must be a nonnegative integer");
      require(std::isfinite(term[1]) && std::isfinite(term[2]), "trig_poly: non-finite coefficient");
    }
  } else if (kind == "lacunary_sin") {
    epsilon_rule.validate();
    require(lac_terms >= 1, "lacunary_sin: terms must be >= 1");
  } else if (kind == "weierstrass_cos") {
    require(std::abs(a) < 1.0, "weierstrass_cos: need |a| < 1");
    require(b >= 1.0 && is_integer(b), "weierstrass_cos: b must be a positive integer");
    require(w_terms >= 1, "weierstrass_cos: terms must be >= 1");
  } else if (kind == "piecewise_linear") {
    require(!nodes.empty(), "piecewise_linear: need at least one node");
    for (size_t i = 0; i < nodes.size(); ++i) {
      require(nodes[i][0] >= 0.0 && nodes[i][0] < kTwoPi, "piecewise_linear: node angle outside [0, 2*pi)");
      require(std::isfinite(nodes[i][1]), "piecewise_linear: non-finite value");
      if (i > 0) require(nodes[i][0] > nodes[i - 1][0], "piecewise_linear: node angles must ascend");
    }
  } else if (kind == "log_radius_of_map") {
    require(std::abs(beta) <= 0.3, "log_radius_of_map: need |beta| <= 0.3");
  } else {
    throw InvalidInput("FunctionSpec: unknown kind '" + kind + "'");
  }
}

FunctionSpec FunctionSpec::from_json(const nlohmann::json& j) {
  FunctionSpec f;
  f.kind = j.at("kind").get<std::string>();
  const auto& p = j.at("params");
  if (f.kind == "trig_poly") {
    for (const auto& row : p.at("terms")) {
      f.terms.push_back({row.at(0).get<double>(), row.at(1).get<double>(), row.at(2).get<double>()});
    }
  } else if (f.kind == "lacunary_sin") {
    f.epsilon_rule = EpsilonRule::from_json(p.at("epsilon_rule"));
    f.lac_terms = p.at("terms").get<int>();
  } else if (f.kind == "weierstrass_cos") {
    f.a = p.at("a").get<double>();
    f.b = p.at("b").get<double>();
    f.w_terms = p.at("terms").get<int>();
  } else if (f.kind == "piecewise_linear") {
    for (const auto& row : p.at("nodes")) {
      f.nodes.push_back({row.at(0).get<double>(), row.at(1).get<double>()});
    }
  } else if (f.kind == "log_radius_of_map") {
    f.beta = p.at("beta").get<double>();
  } else {
    throw InvalidInput("FunctionSpec: unknown kind '" + f.kind + "'");
  }
  f.validate();
  return f;
}

nlohmann::json FunctionSpec::to_json() const {
  nlohmann::json p;
  if (kind == "trig_poly") {
    p["terms"] = nlohmann::json::array();
    for (const auto& term : terms) p["terms"].push_back({term[0], term[1], term[2]});
  } else if (kind == "lacunary_sin") {
    p["epsilon_rule"] = epsilon_rule.to_json();
    p["terms"] = lac_terms;
  } else if (kind == "weierstrass_cos") {
    p["a"] = a;
    p["b"] = b;
    p["terms"] = w_terms;
  } else if (kind == "piecewise_linear") {
    p["nodes"] = nlohmann::json::array();
    for (const auto& node : nodes) p["nodes"].push_back({node[0], node[1]});
  } else if (kind == "log_radius_of_map") {
    p["beta"] = beta;
  }
  return nlohmann::json{{"kind", kind}, {"params", p}};
}

FunctionSpec FunctionSpec::make_trig_poly(std::vector<std::array<double, 3>> terms) {
  FunctionSpec f;
  f.kind = "trig_poly";
  f.terms = std::move(terms);
  return f;
}

FunctionSpec FunctionSpec::make_lacunary_sin(EpsilonRule rule, int terms) {
  FunctionSpec f;
  f.kind = "lacunary_sin";
  f.epsilon_rule = std::move(rule);
  f.lac_terms = terms;
  return f;
}

FunctionSpec FunctionSpec::make_weierstrass_cos(double a, double b, int terms) {
  FunctionSpec f;
  f.kind = "weierstrass_cos";
  f.a = a;
  f.b = b;
  f.w_terms = terms;
  return f;
}

FunctionSpec FunctionSpec::make_piecewise_linear(std::vector<std::array<double, 2>> nodes) {
  FunctionSpec f;
  f.kind = "piecewise_linear";
  f.nodes = std::move(nodes);
  return f;
}

FunctionSpec FunctionSpec::make_log_radius_of_map(double beta) {
  FunctionSpec f;
  f.kind = "log_radius_of_map";
  f.beta = beta;
  return f;
}

FunctionSpec FunctionSpec::scaled(double lambda) const {
  FunctionSpec f = *this;
  f.amp_scale *= lambda;
  return f;
}

std::vector<double> evaluate(const FunctionSpec& spec, const std::vector<double>& points) {
  spec.validate();
  const int n = static_cast<int>(points.size());
  std::vector<double> out(n);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < n; ++j) out[j] = spec.eval(points[j]);
  return out;
}

std::vector<double> evaluate_deriv(const FunctionSpec& spec, const std::vector<double>& points) {
  spec.validate();
  const int n = static_cast<int>(points.size());
  std::vector<double> out(n);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < n; ++j) out[j] = spec.deriv(points[j]);
  return out;
}

std::vector<std::string> catalog_kinds() {
  return {"trig_poly", "lacunary_sin", "weierstrass_cos", "piecewise_linear", "log_radius_of_map"};
}

}  // namespace circlemap
