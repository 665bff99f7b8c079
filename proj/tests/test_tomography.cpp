#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ising2q/gates.hpp"
#include "ising2q/invariants.hpp"
#include "ising2q/tomography.hpp"
#include "oracles.hpp"

using namespace ising2q;

TEST_CASE("chi of the identity and of a pauli") {
  const ProcessMatrix chi_id = chi_of_unitary(gate_identity());
  for (std::size_t m = 0; m < 16; ++m)
    for (std::size_t n = 0; n < 16; ++n) {
      const double want = (m == 0 && n == 0) ? 1.0 : 0.0;
      CHECK(std::abs(chi_id.at(m, n) - want) < 1e-14);
    }

  // X on qubit 1 lives at basis slot m = 4 (XI)
  const Unitary4 xi(kron(pauli(Pauli::X), pauli(Pauli::I)));
  const ProcessMatrix chi_x = chi_of_unitary(xi);
  for (std::size_t m = 0; m < 16; ++m)
    for (std::size_t n = 0; n < 16; ++n) {
      const double want = (m == 4 && n == 4) ? 1.0 : 0.0;
      CHECK(std::abs(chi_x.at(m, n) - want) < 1e-14);
    }
}

TEST_CASE("chi of the controlled-phase gate") {
  // expansion touches II, IZ, ZI, ZZ with weights (1,1,1,-1)/2
  const ProcessMatrix chi = chi_of_unitary(gate_cphase());
  const std::size_t ii = 0, iz = 3, zi = 12, zz = 15;
  const double half = 0.5;
  CHECK(std::abs(chi.at(ii, ii) - half * half) < 1e-14);
  CHECK(std::abs(chi.at(iz, iz) - half * half) < 1e-14);
  CHECK(std::abs(chi.at(zi, zi) - half * half) < 1e-14);
  CHECK(std::abs(chi.at(zz, zz) - half * half) < 1e-14);
  CHECK(std::abs(chi.at(ii, zz) + half * half) < 1e-14);
  CHECK(std::abs(chi.at(ii, iz) - half * half) < 1e-14);
  // nothing outside the {II, IZ, ZI, ZZ} block
  for (std::size_t m = 0; m < 16; ++m) {
    if (m == ii || m == iz || m == zi || m == zz) continue;
    for (std::size_t n = 0; n < 16; ++n) CHECK(std::abs(chi.at(m, n)) < 1e-14);
  }
}

TEST_CASE("chi invariants: hermitian, trace one, psd, rank one") {
  oracle::rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const Unitary4 u = oracle::random_unitary();
    const ProcessMatrix chi = chi_of_unitary(u);

    cplx trace = 0.0;
    double asym = 0.0;
    for (std::size_t m = 0; m < 16; ++m) {
      trace += chi.at(m, m);
      for (std::size_t n = 0; n < 16; ++n)
        asym = std::max(asym,
                        std::abs(chi.at(m, n) - std::conj(chi.at(n, m))));
    }
    CHECK(asym < 1e-14);
    CHECK(std::abs(trace - 1.0) < 1e-10);

    // eigenvalues from the independent dense solver
    std::vector<cplx> dense(chi.chi.begin(), chi.chi.end());
    const auto vals = oracle::jacobi_eigenvalues<16>(dense);
    CHECK(vals.front() > -1e-10);                  // positive semidefinite
    CHECK(vals[14] < 1e-10);                       // second-largest ~ 0
    CHECK(vals.back() == doctest::Approx(1.0).epsilon(1e-10));  // rank one
  }
}

TEST_CASE("process fidelity") {
  const ProcessMatrix chi_id = chi_of_unitary(gate_identity());
  CHECK(process_fidelity(chi_id, chi_id) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(process_fidelity(chi_id, chi_of_unitary(gate_iswap())) ==
        doctest::Approx(0.25).epsilon(1e-12));

  oracle::rng(62);
  const Unitary4 u = oracle::random_unitary();
  const cplx phase = std::exp(cplx(0.0, 1.234));
  CHECK(process_fidelity(chi_of_unitary(u),
                         chi_of_unitary(Unitary4(phase * u.matrix()))) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("process fidelity equals squared overlap for unitary channels") {
  oracle::rng(63);
  for (int trial = 0; trial < 30; ++trial) {
    const Unitary4 u = oracle::random_unitary();
    const Unitary4 v = oracle::random_unitary();
    const double f = overlap_fidelity(u, v);
    CHECK(process_fidelity(chi_of_unitary(u), chi_of_unitary(v)) ==
          doctest::Approx(f * f).epsilon(1e-9));
  }
}

TEST_CASE("local equivalence: identical gates score one immediately") {
  oracle::rng(64);
  const Unitary4 u = oracle::random_unitary();
  const LocalEquivalence r = local_equivalence_fidelity(u, u, 7, 4);
  CHECK(r.fidelity == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.converged);
}

TEST_CASE("local equivalence: result never falls below the bare overlap") {
  oracle::rng(65);
  const Unitary4 u = oracle::random_unitary();
  const Unitary4 v = oracle::random_unitary();
  const LocalEquivalence r = local_equivalence_fidelity(u, v, 7, 2);
  CHECK(r.fidelity >= overlap_fidelity(u, v) - 1e-12);
}

TEST_CASE("local equivalence: known dressing is recovered") {
  oracle::rng(66);
  for (int trial = 0; trial < 3; ++trial) {
    const Unitary4 target = oracle::random_unitary();
    const Unitary4 left(kron(oracle::random_unitary2(), oracle::random_unitary2()));
    const Unitary4 right(kron(oracle::random_unitary2(), oracle::random_unitary2()));
    const Unitary4 u = left * target * right;
    const LocalEquivalence r = local_equivalence_fidelity(u, target, 17);
    CHECK(r.fidelity >= 1.0 - 1e-6);
  }
}

TEST_CASE("local equivalence: equal invariants imply fidelity one") {
  // a canonical nonlocal core dressed two different ways has the same
  // invariants; the optimizer must connect the two gates exactly
  oracle::rng(67);
  const double c1 = oracle::uniform(0.2, 1.2), c2 = oracle::uniform(0.1, 0.8),
               c3 = oracle::uniform(0.0, 0.5);
  const CMat4 core = 0.5 * (c1 * pauli2(Pauli::X, Pauli::X) +
                            c2 * pauli2(Pauli::Y, Pauli::Y) +
                            c3 * pauli2(Pauli::Z, Pauli::Z));
  const Unitary4 v(expm_unitary(core, 1.0));
  const Unitary4 u =
      Unitary4(kron(oracle::random_unitary2(), oracle::random_unitary2())) * v *
      Unitary4(kron(oracle::random_unitary2(), oracle::random_unitary2()));

  const InvariantPair iu = makhlin_invariants(u);
  const InvariantPair iv = makhlin_invariants(v);
  REQUIRE(std::abs(iu.g1 - iv.g1) < 1e-9);
  REQUIRE(std::abs(iu.g2 - iv.g2) < 1e-9);

  const LocalEquivalence r = local_equivalence_fidelity(u, v, 29);
  CHECK(r.fidelity >= 1.0 - 1e-4);
}

TEST_CASE("local equivalence: returned rotations reproduce the fidelity") {
  oracle::rng(68);
  const Unitary4 target = oracle::random_unitary();
  const Unitary4 left(kron(oracle::random_unitary2(), oracle::random_unitary2()));
  const Unitary4 u = left * target;
  const LocalEquivalence r = local_equivalence_fidelity(u, target, 41);

  const CMat4 dressed = kron(r.rotations[0], r.rotations[1]) * target.matrix() *
                        kron(r.rotations[2], r.rotations[3]) *
                        u.matrix().adjoint();
  const double f = std::abs(dressed.trace()) / 4.0;
  CHECK(f == doctest::Approx(r.fidelity).epsilon(1e-9));
}
