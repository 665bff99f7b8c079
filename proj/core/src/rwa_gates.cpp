#include "ising2q/rwa_gates.hpp"

#include <cmath>
#include <limits>

#include "ising2q/errors.hpp"

namespace ising2q {

std::string to_string(AnalyticGateKind kind) {
  switch (kind) {
    case AnalyticGateKind::OneRwa: return "one_rwa";
    case AnalyticGateKind::TwoRwaEqualRabi: return "two_rwa_equal_rabi";
    case AnalyticGateKind::TwoRwaZz: return "two_rwa_zz";
    case AnalyticGateKind::DissimilarOneRwa: return "dissimilar_one_rwa";
    case AnalyticGateKind::DissimilarEqualRabi: return "dissimilar_equal_rabi";
  }
  return "unknown";
}

namespace {

void require_equal_drive(const SystemParams& p) {
  if (p.q1.omega != p.q2.omega)
    throw UnequalDriveFrequencies(
        "this analytic form requires a common drive frequency");
}

// exp[-i t/2 (w1 x(1) + w2 x(2))]
CMat4 x_frame(double w1, double w2, double t) {
  return kron(rot_x(w1 * t), rot_x(w2 * t));
}

// exp[-i t (chi1 z(1) + chi2 z(2))]
CMat4 z_frame(double chi1, double chi2, double t) {
  return kron(rot_z(2.0 * chi1 * t), rot_z(2.0 * chi2 * t));
}

CMat4 sandwich(const SystemParams& p, const CMat4& frames_and_core) {
  const CMat4 a = local_frame_rotation(p);
  return a * frames_and_core * a.adjoint();
}

}  // namespace

CMat4 generator_one_rwa(const SystemParams& p) {
  const DerivedParams d = derive(p);
  const double w = p.q1.omega;
  const double g = p.alpha / (2.0 * d.Omega1 * d.Omega2);
  return 0.5 * (d.Omega1 - w) * pauli2(Pauli::X, Pauli::I) +
         0.5 * (d.Omega2 - w) * pauli2(Pauli::I, Pauli::X) +
         d.chi1 * pauli2(Pauli::Z, Pauli::I) +
         d.chi2 * pauli2(Pauli::I, Pauli::Z) +
         (g * 2.0 * p.q1.J * p.q2.J) * pauli2(Pauli::X, Pauli::X) +
         (g * p.q1.h * p.q2.h) *
             (pauli2(Pauli::Y, Pauli::Y) + pauli2(Pauli::Z, Pauli::Z));
}

CMat4 generator_dissimilar(const SystemParams& p) {
  const DerivedParams d = derive(p);
  return 0.5 * (d.Omega1 - p.q1.omega) * pauli2(Pauli::X, Pauli::I) +
         0.5 * (d.Omega2 - p.q2.omega) * pauli2(Pauli::I, Pauli::X) +
         d.chi1 * pauli2(Pauli::Z, Pauli::I) +
         d.chi2 * pauli2(Pauli::I, Pauli::Z) +
         (p.alpha * p.q1.J * p.q2.J / (d.Omega1 * d.Omega2)) *
             pauli2(Pauli::X, Pauli::X);
}

Unitary4 u3_equal_rabi(const SystemParams& p, double t) {
  const DerivedParams d = derive(p);
  const double pref = p.alpha / (2.0 * d.Omega1 * d.Omega2);
  const CMat4 gen =
      (pref * 0.5 * (p.q1.h * p.q2.h + 2.0 * p.q1.J * p.q2.J)) *
          (pauli2(Pauli::X, Pauli::X) + pauli2(Pauli::Y, Pauli::Y)) +
      (pref * p.q1.h * p.q2.h) * pauli2(Pauli::Z, Pauli::Z);
  return Unitary4(expm_unitary(gen, t));
}

Unitary4 u3_zz(const SystemParams& p, double t) {
  const DerivedParams d = derive(p);
  const double k = p.alpha * p.q1.h * p.q2.h / (2.0 * d.Omega1 * d.Omega2);
  // diagonal, so write it down directly
  CMat4 u;
  const cplx minus = std::exp(cplx(0.0, -k * t));
  const cplx plus = std::exp(cplx(0.0, k * t));
  u(0, 0) = minus;
  u(1, 1) = plus;
  u(2, 2) = plus;
  u(3, 3) = minus;
  return Unitary4(u);
}

Unitary4 u3_dissimilar_equal_rabi(const SystemParams& p, double t) {
  const DerivedParams d = derive(p);
  const double k = p.alpha * p.q1.J * p.q2.J / (2.0 * d.Omega1 * d.Omega2);
  const CMat4 gen =
      k * (pauli2(Pauli::X, Pauli::X) + pauli2(Pauli::Y, Pauli::Y));
  return Unitary4(expm_unitary(gen, t));
}

Unitary4 u_one_rwa(const SystemParams& p, double t) {
  require_equal_drive(p);
  const double w = p.q1.omega;
  const CMat4 core = x_frame(w, w, t) * expm_unitary(generator_one_rwa(p), t);
  return Unitary4(sandwich(p, core));
}

Unitary4 u_two_rwa_zz(const SystemParams& p, double t) {
  require_equal_drive(p);
  const DerivedParams d = derive(p);
  const double w = p.q1.omega;
  const CMat4 core =
      x_frame(w, w, t) * z_frame(d.chi1, d.chi2, t) * u3_zz(p, t).matrix();
  return Unitary4(sandwich(p, core));
}

Unitary4 u_two_rwa_equal_rabi(const SystemParams& p, double t) {
  require_equal_drive(p);
  const DerivedParams d = derive(p);
  const double w = p.q1.omega;
  const CMat4 core = x_frame(w, w, t) * z_frame(d.chi1, d.chi2, t) *
                     u3_equal_rabi(p, t).matrix();
  return Unitary4(sandwich(p, core));
}

Unitary4 u_dissimilar(const SystemParams& p, double t, bool equal_rabi) {
  const DerivedParams d = derive(p);
  const CMat4 xf = x_frame(p.q1.omega, p.q2.omega, t);
  CMat4 core;
  if (equal_rabi) {
    core = xf * z_frame(d.chi1, d.chi2, t) *
           u3_dissimilar_equal_rabi(p, t).matrix();
  } else {
    core = xf * expm_unitary(generator_dissimilar(p), t);
  }
  return Unitary4(sandwich(p, core));
}

Unitary4 analytic_gate(AnalyticGateKind kind, const SystemParams& p, double t) {
  switch (kind) {
    case AnalyticGateKind::OneRwa: return u_one_rwa(p, t);
    case AnalyticGateKind::TwoRwaEqualRabi: return u_two_rwa_equal_rabi(p, t);
    case AnalyticGateKind::TwoRwaZz: return u_two_rwa_zz(p, t);
    case AnalyticGateKind::DissimilarOneRwa: return u_dissimilar(p, t, false);
    case AnalyticGateKind::DissimilarEqualRabi: return u_dissimilar(p, t, true);
  }
  throw InvalidParams("unknown analytic gate kind");
}

Unitary4 rotary_echo(AnalyticGateKind kind, const SystemParams& p, double t) {
  // drive inversion realized by flipping j (hence chi); applied first
  return analytic_gate(kind, p, t / 2) *
         analytic_gate(kind, flip_drive_sign(p), t / 2);
}

std::string to_string(RegimeReport::Splitting s) {
  return s == RegimeReport::Splitting::Similar ? "similar" : "dissimilar";
}

std::string to_string(RegimeReport::RabiCase r) {
  return r == RegimeReport::RabiCase::Equal ? "equal_rabi" : "distinct_rabi";
}

namespace {

double ratio(double num, double den) {
  if (den == 0.0)
    return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return num / den;
}

}  // namespace

RegimeReport regime_check(const SystemParams& p, double t_gate,
                          double threshold) {
  const DerivedParams d = derive(p);
  RegimeReport r;
  r.threshold = threshold;

  const double det1 = std::abs(d.Omega1 - p.q1.omega);
  const double det2 = std::abs(d.Omega2 - p.q2.omega);
  const double chi1 = std::abs(d.chi1), chi2 = std::abs(d.chi2);
  const double dchi = std::abs(chi1 - chi2);
  const double min_chi = std::min(chi1, chi2);
  const double max_alpha_chi = std::max({p.alpha, chi1, chi2});
  const double dsplit = std::abs(d.Omega1 - d.Omega2);

  auto& m = r.margins;
  m["omega_over_detuning_1"] = ratio(p.q1.omega, det1);
  m["omega_over_detuning_2"] = ratio(p.q2.omega, det2);
  m["omega_over_chi_1"] = ratio(p.q1.omega, chi1);
  m["omega_over_chi_2"] = ratio(p.q2.omega, chi2);
  m["chi_over_alpha_1"] = ratio(chi1, p.alpha);
  m["chi_over_alpha_2"] = ratio(chi2, p.alpha);
  m["chi_over_detuning_1"] = ratio(chi1, det1);
  m["chi_over_detuning_2"] = ratio(chi2, det2);
  m["rabi_diff_over_alpha"] = ratio(dchi, p.alpha);
  m["rabi_diff_over_two_min_chi"] = ratio(dchi, 2.0 * min_chi);
  m["splitting_diff_over_max_alpha_chi"] = ratio(dsplit, max_alpha_chi);
  m["alpha_times_gate_time"] = p.alpha * t_gate;

  auto& v = r.valid;
  v["first_rwa_near_resonance"] =
      std::min(m["omega_over_detuning_1"], m["omega_over_detuning_2"]) >=
      threshold;
  v["first_rwa_weak_drive"] =
      std::min(m["omega_over_chi_1"], m["omega_over_chi_2"]) >= threshold;
  v["second_rwa_chi_over_alpha"] =
      std::min(m["chi_over_alpha_1"], m["chi_over_alpha_2"]) >= threshold;
  v["second_rwa_chi_over_detuning"] =
      std::min(m["chi_over_detuning_1"], m["chi_over_detuning_2"]) >= threshold;
  v["equal_rabi_much_less_than_alpha"] =
      m["rabi_diff_over_alpha"] <= 1.0 / threshold;
  v["distinct_rabi_strict"] = m["rabi_diff_over_two_min_chi"] > 1.0;
  v["dissimilar_splitting"] =
      m["splitting_diff_over_max_alpha_chi"] >= threshold;

  r.splitting = v["dissimilar_splitting"] ? RegimeReport::Splitting::Dissimilar
                                          : RegimeReport::Splitting::Similar;
  // the slow-content case split: differences below alpha average to a
  // constant (equal-Rabi form); larger ones drop out (zz form)
  r.rabi = dchi <= p.alpha ? RegimeReport::RabiCase::Equal
                           : RegimeReport::RabiCase::Distinct;
  return r;
}

}  // namespace ising2q
