#include "ising2q/commands.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ising2q/errors.hpp"
#include "ising2q/gates.hpp"
#include "ising2q/invariants.hpp"
#include "ising2q/propagator.hpp"
#include "ising2q/tomography.hpp"
#include "parallel_for.hpp"

namespace ising2q {

namespace {

using nlohmann::json;

// locale-independent, 12 significant digits
std::string fmt(double x) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x,
                                 std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

double s_to_ns(double s) { return s * 1e9; }

std::vector<double> sweep_grid(const SweepConfig& sw) {
  std::vector<double> grid(sw.n_points);
  const double step = (sw.t_end - sw.t_start) / (sw.n_points - 1);
  for (int k = 0; k < sw.n_points; ++k)
    grid[k] = sw.t_start + step * k;
  grid.back() = sw.t_end;
  return grid;
}

// JSON has no inf; clamp to a max sentinel
double json_margin(double x) {
  return std::isinf(x) ? std::numeric_limits<double>::max() : x;
}

json matrix_json(const CMat4& m) {
  json re = json::array(), im = json::array();
  for (std::size_t r = 0; r < 4; ++r) {
    json rrow = json::array(), irow = json::array();
    for (std::size_t c = 0; c < 4; ++c) {
      rrow.push_back(m(r, c).real());
      irow.push_back(m(r, c).imag());
    }
    re.push_back(rrow);
    im.push_back(irow);
  }
  return json{{"real", re}, {"imag", im}};
}

json matrix_json(const CMat2& m) {
  json re = json::array(), im = json::array();
  for (std::size_t r = 0; r < 2; ++r) {
    json rrow = json::array(), irow = json::array();
    for (std::size_t c = 0; c < 2; ++c) {
      rrow.push_back(m(r, c).real());
      irow.push_back(m(r, c).imag());
    }
    re.push_back(rrow);
    im.push_back(irow);
  }
  return json{{"real", re}, {"imag", im}};
}

json chi_json(const ProcessMatrix& chi) {
  json re = json::array(), im = json::array();
  for (std::size_t m = 0; m < 16; ++m) {
    json rrow = json::array(), irow = json::array();
    for (std::size_t n = 0; n < 16; ++n) {
      rrow.push_back(chi.at(m, n).real());
      irow.push_back(chi.at(m, n).imag());
    }
    re.push_back(rrow);
    im.push_back(irow);
  }
  return json{
      {"basis", "E_m = sigma_i (x) sigma_j, m = 4*i + j, axes I,X,Y,Z, qubit 1 major"},
      {"real", re},
      {"imag", im}};
}

Unitary4 gate_for_config(const RunConfig& cfg, double t) {
  return cfg.echo ? rotary_echo(cfg.gate_kind, cfg.system, t)
                  : analytic_gate(cfg.gate_kind, cfg.system, t);
}

InvariantPair invariants_for_config(const RunConfig& cfg, double t) {
  if (cfg.echo) {
    // the echoed zz gate has a closed form; other kinds fall back to the
    // direct computation on the composed gate
    if (cfg.gate_kind == AnalyticGateKind::TwoRwaZz)
      return closed_form_rotary(cfg.system, t);
    return makhlin_invariants(rotary_echo(cfg.gate_kind, cfg.system, t));
  }
  switch (cfg.gate_kind) {
    case AnalyticGateKind::TwoRwaZz: return closed_form_zz(cfg.system, t);
    case AnalyticGateKind::TwoRwaEqualRabi:
      return closed_form_equal_rabi(cfg.system, t);
    case AnalyticGateKind::DissimilarEqualRabi:
      return closed_form_dissimilar(cfg.system, t);
    default:
      return makhlin_invariants(analytic_gate(cfg.gate_kind, cfg.system, t));
  }
}

}  // namespace

void cmd_overlap(const RunConfig& cfg, std::ostream& csv) {
  const std::vector<double> grid = sweep_grid(cfg.sweep);
  const auto traces = overlap_trace_multi(
      cfg.system, {AnalyticGateKind::OneRwa, AnalyticGateKind::TwoRwaZz}, grid,
      cfg.integrator, cfg.echo);
  csv << "t_ns,F_one_rwa,F_two_rwa\n";
  for (std::size_t k = 0; k < grid.size(); ++k)
    csv << fmt(s_to_ns(grid[k])) << ',' << fmt(traces[0][k].fidelity) << ','
        << fmt(traces[1][k].fidelity) << '\n';
}

void cmd_invariants(const RunConfig& cfg, std::ostream& csv,
                    std::ostream& sidecar_json) {
  const std::vector<double> grid = sweep_grid(cfg.sweep);

  struct Row {
    InvariantPair inv;
    double ep = 0.0, env = 0.0;
    bool pe = false;
  };
  std::vector<Row> rows(grid.size());
  detail::parallel_for(grid.size(), [&](std::size_t k) {
    Row r;
    r.inv = invariants_for_config(cfg, grid[k]);
    r.ep = entangling_power(r.inv.g1);
    r.env = entangling_power(closed_form_zz(cfg.system, grid[k]).g1);
    r.pe = is_perfect_entangler(r.inv);
    rows[k] = r;
  });

  csv << "t_ns,ReG1,ImG1,G2,ep,ep_envelope,is_pe\n";
  for (std::size_t k = 0; k < grid.size(); ++k)
    csv << fmt(s_to_ns(grid[k])) << ',' << fmt(rows[k].inv.g1.real()) << ','
        << fmt(rows[k].inv.g1.imag()) << ',' << fmt(rows[k].inv.g2) << ','
        << fmt(rows[k].ep) << ',' << fmt(rows[k].env) << ','
        << (rows[k].pe ? "true" : "false") << '\n';

  json sidecar;
  sidecar["windows_ns"] = json::array();
  for (const auto& [lo, hi] :
       entangling_windows(cfg.system, cfg.sweep.t_start, cfg.sweep.t_end))
    sidecar["windows_ns"].push_back({s_to_ns(lo), s_to_ns(hi)});
  sidecar_json << sidecar.dump(2) << '\n';
}

void cmd_tomography(const RunConfig& cfg, std::ostream& out) {
  const auto target = named_gate(cfg.target_gate);
  if (!target)
    throw ConfigError("tomography.target: unknown gate '" + cfg.target_gate +
                      "' (IDENTITY, CNOT, CPHASE, ISWAP, SWAP)");

  const double t = cfg.gate_time;
  const Unitary4 u =
      cfg.tomography_source == "numeric"
          ? propagate_system(cfg.system, t, cfg.integrator, cfg.echo)
          : gate_for_config(cfg, t);

  const ProcessMatrix chi = chi_of_unitary(u);
  const LocalEquivalence leq =
      local_equivalence_fidelity(u, *target, cfg.seed);
  const InvariantPair inv = makhlin_invariants(u);

  json j;
  j["time_ns"] = s_to_ns(t);
  j["gate_kind"] = to_string(cfg.gate_kind);
  j["echo"] = cfg.echo;
  j["source"] = cfg.tomography_source;
  j["target"] = cfg.target_gate;
  j["chi"] = chi_json(chi);
  j["fidelity"] = leq.fidelity;
  j["optimizer_converged"] = leq.converged;
  j["local_rotations"] = json::array();
  for (const CMat2& k : leq.rotations) j["local_rotations"].push_back(matrix_json(k));
  j["invariants"] = {
      {"G1_re", inv.g1.real()},
      {"G1_im", inv.g1.imag()},
      {"G2", inv.g2},
      {"entangling_power", entangling_power(inv.g1)},
      {"is_perfect_entangler", is_perfect_entangler(inv)},
      {"class", to_string(classify_local_equivalence(inv, cfg.classification_tol))},
  };
  j["process_fidelity_vs_target"] =
      process_fidelity(chi, chi_of_unitary(*target));
  j["unitary"] = matrix_json(u.matrix());
  out << j.dump(2) << '\n';
}

void cmd_regime(const RunConfig& cfg, std::ostream& out) {
  const RegimeReport rep =
      regime_check(cfg.system, cfg.gate_time, cfg.regime_threshold);
  json j;
  j["splitting"] = to_string(rep.splitting);
  j["rabi_case"] = to_string(rep.rabi);
  j["threshold"] = rep.threshold;
  j["gate_time_ns"] = s_to_ns(cfg.gate_time);
  j["margins"] = json::object();
  for (const auto& [name, value] : rep.margins)
    j["margins"][name] = json_margin(value);
  j["valid"] = json::object();
  for (const auto& [name, flag] : rep.valid) j["valid"][name] = flag;
  out << j.dump(2) << '\n';
}

}  // namespace ising2q
