#include "ising2q/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ising2q/errors.hpp"

namespace ising2q {

namespace {

using nlohmann::json;

constexpr double kTwoPi = 6.283185307179586476925286766559;

double mhz_to_rad(double mhz) { return kTwoPi * 1e6 * mhz; }
double ns_to_s(double ns) { return ns * 1e-9; }

// serialized unit-converted values are rounded to 12 significant digits so
// that parse -> serialize reaches a fixed point despite conversion roundoff
double round12(double x) {
  char buf[40];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 12);
  *res.ptr = '\0';
  return std::strtod(buf, nullptr);
}

double rad_to_mhz(double rad) { return round12(rad / (kTwoPi * 1e6)); }
double s_to_ns(double s) { return round12(s * 1e9); }

[[noreturn]] void fail(const std::string& origin, const std::string& field,
                       const std::string& why) {
  throw ConfigError(origin + ": " + field + ": " + why);
}

double get_number(const json& j, const std::string& origin,
                  const std::string& field) {
  const json* cur = &j;
  std::istringstream path(field);
  std::string part;
  while (std::getline(path, part, '.')) {
    if (!cur->contains(part)) fail(origin, field, "missing required field");
    cur = &(*cur)[part];
  }
  if (!cur->is_number()) fail(origin, field, "must be a number");
  return cur->get<double>();
}

double get_number_or(const json& j, const std::string& origin,
                     const std::string& field, double fallback) {
  if (!j.contains(field)) return fallback;
  if (!j[field].is_number()) fail(origin, field, "must be a number");
  return j[field].get<double>();
}

}  // namespace

AnalyticGateKind gate_kind_from_string(const std::string& s) {
  if (s == "one_rwa") return AnalyticGateKind::OneRwa;
  if (s == "two_rwa_equal_rabi") return AnalyticGateKind::TwoRwaEqualRabi;
  if (s == "two_rwa_zz") return AnalyticGateKind::TwoRwaZz;
  if (s == "dissimilar_one_rwa") return AnalyticGateKind::DissimilarOneRwa;
  if (s == "dissimilar_equal_rabi") return AnalyticGateKind::DissimilarEqualRabi;
  throw ConfigError("unknown gate_kind '" + s + "'");
}

RunConfig parse_config(const std::string& json_text, const std::string& origin) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(origin + ": " + e.what());
  }

  RunConfig c;

  if (!j.contains("system")) fail(origin, "system", "missing required field");
  const json& sys = j["system"];
  c.system.q1.J = mhz_to_rad(get_number(j, origin, "system.J1_over_2pi_MHz"));
  c.system.q2.J = mhz_to_rad(get_number(j, origin, "system.J2_over_2pi_MHz"));
  c.system.q1.h = mhz_to_rad(get_number(j, origin, "system.h1_over_2pi_MHz"));
  c.system.q2.h = mhz_to_rad(get_number(j, origin, "system.h2_over_2pi_MHz"));
  c.system.q1.j = mhz_to_rad(get_number(j, origin, "system.j1_over_2pi_MHz"));
  c.system.q2.j = mhz_to_rad(get_number(j, origin, "system.j2_over_2pi_MHz"));
  if (sys.contains("omega_over_2pi_MHz")) {
    const double w = mhz_to_rad(get_number(j, origin, "system.omega_over_2pi_MHz"));
    c.system.q1.omega = w;
    c.system.q2.omega = w;
  } else {
    c.system.q1.omega =
        mhz_to_rad(get_number(j, origin, "system.omega1_over_2pi_MHz"));
    c.system.q2.omega =
        mhz_to_rad(get_number(j, origin, "system.omega2_over_2pi_MHz"));
  }
  c.system.alpha = mhz_to_rad(get_number(j, origin, "system.alpha_over_2pi_MHz"));
  try {
    validate_physical(c.system);
  } catch (const InvalidParams& e) {
    fail(origin, "system", e.what());
  }

  if (!j.contains("sweep")) fail(origin, "sweep", "missing required field");
  c.sweep.t_start = ns_to_s(get_number(j, origin, "sweep.t_start_ns"));
  c.sweep.t_end = ns_to_s(get_number(j, origin, "sweep.t_end_ns"));
  const double np = get_number(j, origin, "sweep.n_points");
  if (np != std::floor(np)) fail(origin, "sweep.n_points", "must be an integer");
  c.sweep.n_points = static_cast<int>(np);
  if (c.sweep.n_points < 2) fail(origin, "sweep.n_points", "must be >= 2");
  if (!(c.sweep.t_start >= 0.0))
    fail(origin, "sweep.t_start_ns", "must be >= 0");
  if (!(c.sweep.t_end > c.sweep.t_start))
    fail(origin, "sweep.t_end_ns", "must be > t_start_ns");

  c.integrator = default_integrator(c.system);
  if (j.contains("integrator")) {
    const json& ig = j["integrator"];
    c.integrator_from_config = true;
    c.integrator.dt =
        ns_to_s(get_number_or(ig, origin, "dt_ns", s_to_ns(c.integrator.dt)));
    const double rn = get_number_or(ig, origin, "renormalize_every",
                                    c.integrator.renormalize_every);
    c.integrator.renormalize_every = static_cast<int>(rn);
    try {
      check_step(c.system, c.integrator);
    } catch (const StepTooLarge& e) {
      fail(origin, "integrator.dt_ns", e.what());
    }
  }

  if (j.contains("gate_kind")) {
    if (!j["gate_kind"].is_string())
      fail(origin, "gate_kind", "must be a string");
    try {
      c.gate_kind = gate_kind_from_string(j["gate_kind"].get<std::string>());
    } catch (const ConfigError& e) {
      fail(origin, "gate_kind", e.what());
    }
  }

  if (j.contains("echo")) {
    if (!j["echo"].is_boolean()) fail(origin, "echo", "must be a boolean");
    c.echo = j["echo"].get<bool>();
  }

  c.gate_time = ns_to_s(
      get_number_or(j, origin, "gate_time_ns", s_to_ns(c.sweep.t_end)));
  if (!(c.gate_time >= 0.0)) fail(origin, "gate_time_ns", "must be >= 0");

  if (j.contains("tomography")) {
    const json& tm = j["tomography"];
    if (tm.contains("target")) {
      if (!tm["target"].is_string())
        fail(origin, "tomography.target", "must be a string");
      c.target_gate = tm["target"].get<std::string>();
    }
    if (tm.contains("source")) {
      if (!tm["source"].is_string())
        fail(origin, "tomography.source", "must be a string");
      c.tomography_source = tm["source"].get<std::string>();
      if (c.tomography_source != "analytic" && c.tomography_source != "numeric")
        fail(origin, "tomography.source", "must be 'analytic' or 'numeric'");
    }
  }

  c.regime_threshold = get_number_or(j, origin, "regime_threshold", 10.0);
  if (!(c.regime_threshold > 0.0))
    fail(origin, "regime_threshold", "must be > 0");
  c.classification_tol =
      get_number_or(j, origin, "classification_tolerance", 0.05);
  if (!(c.classification_tol > 0.0))
    fail(origin, "classification_tolerance", "must be > 0");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer() && !j["seed"].is_number_unsigned())
      fail(origin, "seed", "must be a non-negative integer");
    c.seed = j["seed"].get<std::uint64_t>();
  }

  if (j.contains("output")) {
    const json& out = j["output"];
    if (out.contains("path")) {
      if (!out["path"].is_string())
        fail(origin, "output.path", "must be a string");
      c.output_path = out["path"].get<std::string>();
    }
  }

  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

std::string serialize_config(const RunConfig& c) {
  json j;
  j["system"] = {
      {"J1_over_2pi_MHz", rad_to_mhz(c.system.q1.J)},
      {"J2_over_2pi_MHz", rad_to_mhz(c.system.q2.J)},
      {"h1_over_2pi_MHz", rad_to_mhz(c.system.q1.h)},
      {"h2_over_2pi_MHz", rad_to_mhz(c.system.q2.h)},
      {"j1_over_2pi_MHz", rad_to_mhz(c.system.q1.j)},
      {"j2_over_2pi_MHz", rad_to_mhz(c.system.q2.j)},
      {"omega1_over_2pi_MHz", rad_to_mhz(c.system.q1.omega)},
      {"omega2_over_2pi_MHz", rad_to_mhz(c.system.q2.omega)},
      {"alpha_over_2pi_MHz", rad_to_mhz(c.system.alpha)},
  };
  j["sweep"] = {
      {"t_start_ns", s_to_ns(c.sweep.t_start)},
      {"t_end_ns", s_to_ns(c.sweep.t_end)},
      {"n_points", c.sweep.n_points},
  };
  if (c.integrator_from_config) {
    j["integrator"] = {
        {"dt_ns", s_to_ns(c.integrator.dt)},
        {"renormalize_every", c.integrator.renormalize_every},
    };
  }
  j["gate_kind"] = to_string(c.gate_kind);
  j["echo"] = c.echo;
  j["gate_time_ns"] = s_to_ns(c.gate_time);
  j["tomography"] = {
      {"target", c.target_gate},
      {"source", c.tomography_source},
  };
  j["regime_threshold"] = c.regime_threshold;
  j["classification_tolerance"] = c.classification_tol;
  j["seed"] = c.seed;
  if (!c.output_path.empty()) j["output"] = {{"path", c.output_path}};
  return j.dump(2) + "\n";
}

}  // namespace ising2q
