#pragma once

#include "ising2q/linalg.hpp"

namespace ising2q {

// All frequencies are angular (rad/s); times are seconds.
// I/O layers convert from the frequency/2pi-in-MHz convention.

struct QubitParams {
  double J = 0.0;      // static field along z (mean of the controlled exchange)
  double j = 0.0;      // drive amplitude along z
  double h = 0.0;      // uncontrolled static field along x, must be > 0
  double omega = 0.0;  // drive frequency, must be > 0
};

struct SystemParams {
  QubitParams q1;
  QubitParams q2;
  double alpha = 0.0;  // static Ising (zz) coupling strength
};

struct DerivedParams {
  double Omega1 = 0.0, Omega2 = 0.0;  // total local splittings sqrt(J^2 + h^2)
  double chi1 = 0.0, chi2 = 0.0;      // Rabi frequencies h*j / (4*Omega)
  double phi1 = 0.0, phi2 = 0.0;      // tilt angles arctan(J/h)
};

// h > 0 and omega > 0 are required everywhere; throws InvalidParams
void validate_core(const SystemParams& p);

// full ingestion-time validation: additionally j >= 0 and alpha >= 0
// (internally the echo machinery flips the sign of j, so only the
// configuration layer enforces non-negative drive amplitudes)
void validate_physical(const SystemParams& p);

DerivedParams derive(const SystemParams& p);

// drive-phase inversion used by rotary echo: j -> -j on both qubits
SystemParams flip_drive_sign(const SystemParams& p);

// H(t) = sum_i [(J_i + j_i cos w_i t)/2 sigma_z^(i) + h_i/2 sigma_x^(i)]
//        + alpha sigma_zz
CMat4 hamiltonian_lab(const SystemParams& p, double t);

// generator after rotating each qubit so its static field points along x:
// sum_i [(Omega_i^2 + J_i j_i cos w_i t)/(2 Omega_i) sigma_x^(i)
//        + 2 chi_i cos(w_i t) sigma_z^(i)]
// + alpha/(Omega1 Omega2) [J1 J2 xx + J1 h2 xz + J2 h1 zx + h1 h2 zz]
CMat4 hamiltonian_rotated(const SystemParams& p, double t);

// the product of single-qubit y rotations relating the two frames:
// exp[+i/2 (phi1 sigma_y^(1) + phi2 sigma_y^(2))], so that
// hamiltonian_rotated == R† hamiltonian_lab R with R this matrix
CMat4 local_frame_rotation(const SystemParams& p);

}  // namespace ising2q
