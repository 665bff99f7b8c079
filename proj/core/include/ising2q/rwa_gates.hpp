#pragma once

#include <map>
#include <string>

#include "ising2q/model.hpp"
#include "ising2q/unitary.hpp"

namespace ising2q {

// The closed-form propagators. "OneRwa" keeps the full time-independent
// rotating-frame generator; the "TwoRwa" forms average a second time and
// keep only the slow nonlocal content (xy-exchange or zz, depending on
// whether the two Rabi frequencies are close or well separated).
// "Dissimilar" covers qubits with very different splittings, each driven
// at its own frequency.
enum class AnalyticGateKind {
  OneRwa,
  TwoRwaEqualRabi,
  TwoRwaZz,
  DissimilarOneRwa,
  DissimilarEqualRabi,
};

std::string to_string(AnalyticGateKind kind);

// --- rotating-frame building blocks (local frame factors stripped) ---
// Local invariants are insensitive to the frame factors, so tests and the
// invariants module work against these directly.

// time-independent generator after the first averaging (common drive
// frequency): sum_i [(Omega_i - w)/2 sigma_x^(i) + chi_i sigma_z^(i)]
//   + alpha/(2 O1 O2) [2 J1 J2 xx + h1 h2 (yy + zz)]
CMat4 generator_one_rwa(const SystemParams& p);

// same for per-qubit drive frequencies; only the xx coupling survives:
// sum_i [(Omega_i - w_i)/2 sigma_x^(i) + chi_i sigma_z^(i)]
//   + alpha J1 J2/(O1 O2) xx
CMat4 generator_dissimilar(const SystemParams& p);

// slow content after the second averaging, similar Rabi frequencies:
// exp[-i alpha t/2 ((h1 h2 + 2 J1 J2)/(2 O1 O2) (xx + yy) + h1 h2/(O1 O2) zz)]
Unitary4 u3_equal_rabi(const SystemParams& p, double t);

// slow content after the second averaging, well-separated Rabi frequencies:
// exp[-i t alpha h1 h2/(2 O1 O2) zz]
Unitary4 u3_zz(const SystemParams& p, double t);

// slow content for dissimilar splittings, similar Rabi frequencies:
// exp[-i alpha t J1 J2/(2 O1 O2) (xx + yy)]
Unitary4 u3_dissimilar_equal_rabi(const SystemParams& p, double t);

// --- lab-frame gates ---

// one averaging round; requires w1 == w2 (throws UnequalDriveFrequencies)
Unitary4 u_one_rwa(const SystemParams& p, double t);

// two averaging rounds, zz form; requires w1 == w2
Unitary4 u_two_rwa_zz(const SystemParams& p, double t);

// two averaging rounds, xy+zz form for similar Rabi frequencies;
// requires w1 == w2
Unitary4 u_two_rwa_equal_rabi(const SystemParams& p, double t);

// dissimilar splittings; equal_rabi selects the second averaging round
Unitary4 u_dissimilar(const SystemParams& p, double t, bool equal_rabi);

Unitary4 analytic_gate(AnalyticGateKind kind, const SystemParams& p, double t);

// drive-phase inversion halfway through: U(+j, t/2) * U(-j, t/2)
Unitary4 rotary_echo(AnalyticGateKind kind, const SystemParams& p, double t);

// --- regime validity ---

struct RegimeReport {
  enum class Splitting { Similar, Dissimilar };
  enum class RabiCase { Equal, Distinct };

  Splitting splitting = Splitting::Similar;
  RabiCase rabi = RabiCase::Equal;
  double threshold = 10.0;  // ratio treated as "much greater than"

  // named dimensionless ratios; +inf when the denominator vanishes
  std::map<std::string, double> margins;
  // each averaging assumption, true when its margin clears the threshold
  std::map<std::string, bool> valid;
};

std::string to_string(RegimeReport::Splitting s);
std::string to_string(RegimeReport::RabiCase r);

RegimeReport regime_check(const SystemParams& p, double t_gate,
                          double threshold = 10.0);

}  // namespace ising2q
