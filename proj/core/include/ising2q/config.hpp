#pragma once

#include <cstdint>
#include <string>

#include "ising2q/model.hpp"
#include "ising2q/propagator.hpp"
#include "ising2q/rwa_gates.hpp"

namespace ising2q {

// I/O units: frequencies are quoted as frequency/2pi in MHz, times in ns.
// Everything is converted to angular rad/s and seconds on ingestion.

struct SweepConfig {
  double t_start = 0.0;  // s
  double t_end = 0.0;    // s
  int n_points = 2;
};

struct RunConfig {
  SystemParams system;         // rad/s
  IntegratorConfig integrator; // defaulted from the system when absent
  bool integrator_from_config = false;
  SweepConfig sweep;
  AnalyticGateKind gate_kind = AnalyticGateKind::TwoRwaZz;
  bool echo = false;
  double gate_time = 0.0;      // s; single-time commands; defaults to t_end
  std::string target_gate = "CPHASE";
  std::string tomography_source = "analytic";  // or "numeric"
  double regime_threshold = 10.0;
  double classification_tol = 0.05;
  std::uint64_t seed = 12345;
  std::string output_path;     // optional default for --out
};

// parse/validate; origin is used in error messages ("file: field: why").
// throws ConfigError
RunConfig parse_config(const std::string& json_text, const std::string& origin);
RunConfig load_config(const std::string& path);

// canonical JSON form; parse(serialize(c)) reproduces c
std::string serialize_config(const RunConfig& c);

AnalyticGateKind gate_kind_from_string(const std::string& s);

}  // namespace ising2q
