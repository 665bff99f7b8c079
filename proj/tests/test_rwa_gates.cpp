#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ising2q/errors.hpp"
#include "ising2q/invariants.hpp"
#include "ising2q/propagator.hpp"
#include "ising2q/rwa_gates.hpp"
#include "oracles.hpp"

using namespace ising2q;

namespace {

constexpr double kMHz = 6.283185307179586e6;
const double kPi = std::acos(-1.0);

SystemParams reference_params() {
  SystemParams p;
  p.q1 = {266.4 * kMHz, 69.3 * kMHz, 922.3 * kMHz, 960.0 * kMHz};
  p.q2 = {320.0 * kMHz, 36.0 * kMHz, 905.1 * kMHz, 960.0 * kMHz};
  p.alpha = 2.3 * kMHz;
  return p;
}

// well-separated splittings, resonant per-qubit drives, matched Rabi rates
SystemParams dissimilar_params() {
  SystemParams p;
  p.q1 = {266.4 * kMHz, 69.3 * kMHz, 922.3 * kMHz, 0.0};
  p.q2 = {320.0 * kMHz, 67.6 * kMHz, 1805.1 * kMHz, 0.0};
  p.alpha = 2.3 * kMHz;
  const DerivedParams d = derive(p);
  p.q1.omega = d.Omega1;
  p.q2.omega = d.Omega2;
  return p;
}

}  // namespace

TEST_CASE("analytic gates are the identity at t = 0") {
  const SystemParams p = reference_params();
  for (AnalyticGateKind kind :
       {AnalyticGateKind::OneRwa, AnalyticGateKind::TwoRwaEqualRabi,
        AnalyticGateKind::TwoRwaZz, AnalyticGateKind::DissimilarOneRwa,
        AnalyticGateKind::DissimilarEqualRabi}) {
    CHECK(max_abs_diff(analytic_gate(kind, p, 0.0).matrix(),
                       CMat4::identity()) < 1e-12);
  }
}

TEST_CASE("common-drive forms reject unequal drive frequencies") {
  SystemParams p = reference_params();
  p.q2.omega = 1.5 * p.q1.omega;
  CHECK_THROWS_AS(u_one_rwa(p, 1e-9), UnequalDriveFrequencies);
  CHECK_THROWS_AS(u_two_rwa_zz(p, 1e-9), UnequalDriveFrequencies);
  CHECK_THROWS_AS(u_two_rwa_equal_rabi(p, 1e-9), UnequalDriveFrequencies);
  CHECK_NOTHROW(u_dissimilar(p, 1e-9, true));
}

TEST_CASE("one-round generator: drive enters only through chi") {
  SystemParams p = reference_params();
  const DerivedParams d = derive(p);
  const auto coef = pauli_coefficients(generator_one_rwa(p));
  // x coefficients are the detunings, independent of j
  CHECK(coef[4].real() ==
        doctest::Approx(0.5 * (d.Omega1 - p.q1.omega)).epsilon(1e-12));
  CHECK(coef[1].real() ==
        doctest::Approx(0.5 * (d.Omega2 - p.q2.omega)).epsilon(1e-12));

  SystemParams stronger = p;
  stronger.q1.j *= 3.0;
  stronger.q2.j *= 3.0;
  const auto coef2 = pauli_coefficients(generator_one_rwa(stronger));
  CHECK(coef2[4] == coef[4]);  // no J*j cross term survives the averaging
  CHECK(coef2[1] == coef[1]);
  // z coefficients are chi, which scales with j
  CHECK(coef2[12].real() == doctest::Approx(3.0 * coef[12].real()));
  CHECK(coef2[3].real() == doctest::Approx(3.0 * coef[3].real()));
}

TEST_CASE("one-round gate: local limit when resonant and undriven") {
  SystemParams p = reference_params();
  p.alpha = 0.0;
  p.q1.j = 0.0;
  p.q2.j = 0.0;
  const DerivedParams d = derive(p);
  p.q1.omega = d.Omega1;
  p.q2.omega = d.Omega2;
  // the drive frequencies differ slightly; force a common resonant value
  p.q1.omega = p.q2.omega = 0.5 * (d.Omega1 + d.Omega2);

  SUBCASE("kron-factorizable when detuning vanishes exactly") {
    SystemParams q = p;
    // make both splittings exactly equal to the drive
    q.q1.J = 0.0;
    q.q2.J = 0.0;
    q.q1.h = q.q1.omega;
    q.q2.h = q.q2.omega;
    const Unitary4 u = u_one_rwa(q, 123.4e-9);
    CHECK(oracle::kron_factorization_residual(u.matrix()) < 1e-12);
  }
}

TEST_CASE("one-round gate tracks the numeric propagator at the gate time") {
  const SystemParams p = reference_params();
  const auto cfg = default_integrator(p);
  const double t = 615.7e-9;
  const Unitary4 numeric = propagate_system(p, t, cfg);
  CHECK(overlap_fidelity(u_one_rwa(p, t), numeric) >= 0.99);
}

TEST_CASE("zz gate: no coupling means a local gate") {
  SystemParams p = reference_params();
  p.alpha = 0.0;
  const InvariantPair inv = makhlin_invariants(u_two_rwa_zz(p, 321e-9));
  CHECK(std::abs(inv.g1 - cplx(1.0, 0.0)) < 1e-10);
}

TEST_CASE("zz gate reaches the cnot class at the quarter-period") {
  const SystemParams p = reference_params();
  const DerivedParams d = derive(p);
  const double t_star =
      kPi * d.Omega1 * d.Omega2 / (2.0 * p.alpha * p.q1.h * p.q2.h);
  const InvariantPair inv = makhlin_invariants(u_two_rwa_zz(p, t_star));
  CHECK(std::abs(inv.g1) < 1e-9);
  CHECK(std::abs(inv.g2 - 1.0) < 1e-9);
}

TEST_CASE("equal-rabi gate: closed-form invariants match for random draws") {
  oracle::rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const SystemParams p = oracle::random_params();
    const double t = oracle::uniform(0.0, 1e-6);
    const InvariantPair direct =
        makhlin_invariants(u_two_rwa_equal_rabi(p, t));
    const InvariantPair closed = closed_form_equal_rabi(p, t);
    CHECK(std::abs(direct.g1 - closed.g1) < 1e-9);
    CHECK(std::abs(direct.g2 - closed.g2) < 1e-9);
  }
}

TEST_CASE("equal-rabi gate: no coupling means a local gate") {
  SystemParams p = reference_params();
  p.alpha = 0.0;
  const InvariantPair inv =
      makhlin_invariants(u_two_rwa_equal_rabi(p, 450e-9));
  CHECK(std::abs(inv.g1 - cplx(1.0, 0.0)) < 1e-10);
}

TEST_CASE("dissimilar gate: iswap class at the resolved condition") {
  const SystemParams p = dissimilar_params();
  const DerivedParams d = derive(p);
  // direct evaluation supports J1 J2 alpha t / (O1 O2) = pi/2
  const double t_iswap =
      kPi * d.Omega1 * d.Omega2 / (2.0 * p.q1.J * p.q2.J * p.alpha);
  const InvariantPair inv = makhlin_invariants(u_dissimilar(p, t_iswap, true));
  CHECK(std::abs(inv.g1) < 1e-9);
  CHECK(std::abs(inv.g2 + 1.0) < 1e-9);

  // at half that time the gate sits in the sqrt-iswap class instead
  const InvariantPair half =
      makhlin_invariants(u_dissimilar(p, t_iswap / 2.0, true));
  CHECK(std::abs(half.g1 - cplx(0.25, 0.0)) < 1e-9);
  CHECK(std::abs(half.g2 - 1.0) < 1e-9);
}

TEST_CASE("dissimilar gate: no z-z exchange leaves it local") {
  SystemParams p = dissimilar_params();
  p.q1.J = 0.0;
  for (double t : {100e-9, 700e-9, 2.4e-6}) {
    const InvariantPair inv = makhlin_invariants(u_dissimilar(p, t, true));
    CHECK(std::abs(inv.g1 - cplx(1.0, 0.0)) < 1e-10);
  }
}

TEST_CASE("dissimilar distinct-rabi limit: slow content is local") {
  // when the second averaging removes the exchange term entirely, only the
  // frame factors remain; that composition carries no entanglement
  const SystemParams p = dissimilar_params();
  const DerivedParams d = derive(p);
  const double t = 1.3e-6;
  const CMat4 a = local_frame_rotation(p);
  const CMat4 frames = kron(rot_x(p.q1.omega * t), rot_x(p.q2.omega * t)) *
                       kron(rot_z(2 * d.chi1 * t), rot_z(2 * d.chi2 * t));
  const Unitary4 u(a * frames * a.adjoint());
  const InvariantPair inv = makhlin_invariants(u);
  CHECK(std::abs(inv.g1 - cplx(1.0, 0.0)) < 1e-10);
  CHECK(oracle::kron_factorization_residual(u.matrix()) < 1e-12);
}

TEST_CASE("rotary echo: local when the coupling vanishes") {
  SystemParams p = reference_params();
  p.alpha = 0.0;
  const InvariantPair inv =
      makhlin_invariants(rotary_echo(AnalyticGateKind::TwoRwaZz, p, 615.7e-9));
  CHECK(std::abs(inv.g1 - cplx(1.0, 0.0)) < 1e-10);
}

TEST_CASE("rotary echo at the reference gate time") {
  const SystemParams p = reference_params();
  const InvariantPair inv =
      makhlin_invariants(rotary_echo(AnalyticGateKind::TwoRwaZz, p, 615.7e-9));
  CHECK(std::abs(inv.g1 - 0.03) < 0.02);
  CHECK(std::abs(inv.g2 - 1.06) < 0.02);
}

TEST_CASE("echoed zz invariants match the closed form at random times") {
  const SystemParams p = reference_params();
  oracle::rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    const double t = oracle::uniform(0.0, 1e-6);
    const InvariantPair direct =
        makhlin_invariants(rotary_echo(AnalyticGateKind::TwoRwaZz, p, t));
    const InvariantPair closed = closed_form_rotary(p, t);
    CHECK(std::abs(direct.g1 - closed.g1) < 1e-9);
    CHECK(std::abs(direct.g2 - closed.g2) < 1e-9);
  }
}

TEST_CASE("slow factors compose in their own frame") {
  const SystemParams p = reference_params();
  const double t1 = 133e-9, t2 = 412e-9;
  CHECK(max_abs_diff(u3_zz(p, t1 + t2).matrix(),
                     (u3_zz(p, t1) * u3_zz(p, t2)).matrix()) < 1e-12);
  CHECK(max_abs_diff(u3_equal_rabi(p, t1 + t2).matrix(),
                     (u3_equal_rabi(p, t1) * u3_equal_rabi(p, t2)).matrix()) <
        1e-12);
  CHECK(max_abs_diff(
            u3_dissimilar_equal_rabi(p, t1 + t2).matrix(),
            (u3_dissimilar_equal_rabi(p, t1) * u3_dissimilar_equal_rabi(p, t2))
                .matrix()) < 1e-12);
}

TEST_CASE("regime report: reference parameters") {
  const SystemParams p = reference_params();
  const RegimeReport r = regime_check(p, 615.7e-9);
  CHECK(r.splitting == RegimeReport::Splitting::Similar);
  CHECK(r.rabi == RegimeReport::RabiCase::Distinct);
  CHECK(r.valid.at("first_rwa_near_resonance"));
  CHECK(r.valid.at("first_rwa_weak_drive"));
  CHECK(r.margins.at("omega_over_chi_1") > 10.0);
  CHECK(r.margins.at("omega_over_chi_2") > 10.0);
  CHECK(r.margins.at("omega_over_detuning_1") > 10.0);
  CHECK(r.margins.at("omega_over_detuning_2") > 10.0);
  // second-round margins are real but below the strict threshold here
  CHECK(r.margins.at("chi_over_alpha_1") == doctest::Approx(7.2368).epsilon(1e-3));
  CHECK(r.margins.at("chi_over_alpha_2") == doctest::Approx(3.6893).epsilon(1e-3));
}

TEST_CASE("regime report: symmetric qubits classify as equal-rabi") {
  SystemParams p = reference_params();
  p.q2 = p.q1;
  const RegimeReport r = regime_check(p, 500e-9);
  CHECK(r.rabi == RegimeReport::RabiCase::Equal);
}

TEST_CASE("regime report: zero coupling produces an infinite margin") {
  SystemParams p = reference_params();
  p.alpha = 0.0;
  const RegimeReport r = regime_check(p, 500e-9);
  CHECK(std::isinf(r.margins.at("chi_over_alpha_1")));
  CHECK(std::isinf(r.margins.at("rabi_diff_over_alpha")));
}

TEST_CASE("regime report: far off-resonant drive is flagged") {
  SystemParams p = reference_params();
  p.q1.omega = 0.5 * p.q1.omega;
  p.q2.omega = p.q1.omega;
  const RegimeReport r = regime_check(p, 500e-9);
  CHECK_FALSE(r.valid.at("first_rwa_near_resonance"));
}

TEST_CASE("regime report: dissimilar splittings recognized") {
  const RegimeReport r = regime_check(dissimilar_params(), 2.24e-6);
  CHECK(r.splitting == RegimeReport::Splitting::Dissimilar);
}
