#include "ising2q/model.hpp"

#include <cmath>

#include "ising2q/errors.hpp"

namespace ising2q {

void validate_core(const SystemParams& p) {
  if (!(p.q1.h > 0.0) || !(p.q2.h > 0.0))
    throw InvalidParams("h must be > 0 on both qubits");
  if (!(p.q1.omega > 0.0) || !(p.q2.omega > 0.0))
    throw InvalidParams("omega must be > 0 on both qubits");
}

void validate_physical(const SystemParams& p) {
  validate_core(p);
  if (p.q1.j < 0.0 || p.q2.j < 0.0)
    throw InvalidParams("drive amplitude j must be >= 0");
  if (p.alpha < 0.0) throw InvalidParams("coupling alpha must be >= 0");
}

DerivedParams derive(const SystemParams& p) {
  if (!(p.q1.h > 0.0) || !(p.q2.h > 0.0))
    throw InvalidParams("h must be > 0 on both qubits");
  DerivedParams d;
  d.Omega1 = std::hypot(p.q1.J, p.q1.h);
  d.Omega2 = std::hypot(p.q2.J, p.q2.h);
  d.chi1 = p.q1.h * p.q1.j / (4.0 * d.Omega1);
  d.chi2 = p.q2.h * p.q2.j / (4.0 * d.Omega2);
  d.phi1 = std::atan2(p.q1.J, p.q1.h);
  d.phi2 = std::atan2(p.q2.J, p.q2.h);
  return d;
}

SystemParams flip_drive_sign(const SystemParams& p) {
  SystemParams f = p;
  f.q1.j = -f.q1.j;
  f.q2.j = -f.q2.j;
  return f;
}

CMat4 hamiltonian_lab(const SystemParams& p, double t) {
  const double z1 = 0.5 * (p.q1.J + p.q1.j * std::cos(p.q1.omega * t));
  const double z2 = 0.5 * (p.q2.J + p.q2.j * std::cos(p.q2.omega * t));
  return z1 * pauli2(Pauli::Z, Pauli::I) + z2 * pauli2(Pauli::I, Pauli::Z) +
         (0.5 * p.q1.h) * pauli2(Pauli::X, Pauli::I) +
         (0.5 * p.q2.h) * pauli2(Pauli::I, Pauli::X) +
         p.alpha * pauli2(Pauli::Z, Pauli::Z);
}

CMat4 hamiltonian_rotated(const SystemParams& p, double t) {
  const DerivedParams d = derive(p);
  const double c1 = std::cos(p.q1.omega * t), c2 = std::cos(p.q2.omega * t);
  const double x1 = (d.Omega1 * d.Omega1 + p.q1.J * p.q1.j * c1) / (2.0 * d.Omega1);
  const double x2 = (d.Omega2 * d.Omega2 + p.q2.J * p.q2.j * c2) / (2.0 * d.Omega2);
  const double z1 = 2.0 * d.chi1 * c1;
  const double z2 = 2.0 * d.chi2 * c2;
  const double g = p.alpha / (d.Omega1 * d.Omega2);
  return x1 * pauli2(Pauli::X, Pauli::I) + x2 * pauli2(Pauli::I, Pauli::X) +
         z1 * pauli2(Pauli::Z, Pauli::I) + z2 * pauli2(Pauli::I, Pauli::Z) +
         (g * p.q1.J * p.q2.J) * pauli2(Pauli::X, Pauli::X) +
         (g * p.q1.J * p.q2.h) * pauli2(Pauli::X, Pauli::Z) +
         (g * p.q2.J * p.q1.h) * pauli2(Pauli::Z, Pauli::X) +
         (g * p.q1.h * p.q2.h) * pauli2(Pauli::Z, Pauli::Z);
}

CMat4 local_frame_rotation(const SystemParams& p) {
  const DerivedParams d = derive(p);
  // rot_y(angle) = exp(-i angle/2 sigma_y), so the +phi/2 exponent needs -phi
  return kron(rot_y(-d.phi1), rot_y(-d.phi2));
}

}  // namespace ising2q
