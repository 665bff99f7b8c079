#pragma once

#include <array>
#include <cstdint>

#include "ising2q/linalg.hpp"
#include "ising2q/unitary.hpp"

namespace ising2q {

// Process matrix chi in the two-qubit Pauli operator basis E_m with
// m = 4*i + j, axis order I, X, Y, Z, qubit 1 major. For the unitary
// channels built here chi is hermitian, positive semidefinite, trace one
// and rank one.
struct ProcessMatrix {
  std::array<cplx, 16 * 16> chi{};

  cplx& at(std::size_t m, std::size_t n) { return chi[m * 16 + n]; }
  const cplx& at(std::size_t m, std::size_t n) const { return chi[m * 16 + n]; }
};

// chi = a a† with a_m = tr(E_m† U) / 4
ProcessMatrix chi_of_unitary(const Unitary4& u);

// tr(chi1 chi2); for unitary channels this equals overlap_fidelity^2
double process_fidelity(const ProcessMatrix& chi1, const ProcessMatrix& chi2);

struct LocalEquivalence {
  double fidelity = 0.0;
  // maximizing single-qubit rotations: F = |tr((k0 x k1) T (k2 x k3) u†)|/4
  std::array<CMat2, 4> rotations{};
  bool converged = false;  // best restart met the simplex-diameter tolerance
};

// Best achievable overlap between u and target up to single-qubit rotations
// on either side, found by seeded Nelder-Mead over 4 sets of Euler angles
// (12 parameters, `restarts` random restarts plus a polish stage). The
// result never falls below overlap_fidelity(u, target); when the optimizer
// fails to converge the best value found so far is still returned with
// converged = false.
LocalEquivalence local_equivalence_fidelity(const Unitary4& u,
                                            const Unitary4& target,
                                            std::uint64_t seed = 12345,
                                            int restarts = 20);

}  // namespace ising2q
