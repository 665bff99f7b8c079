#include "ising2q/unitary.hpp"

#include <cmath>

#include "ising2q/errors.hpp"

namespace ising2q {

Unitary4::Unitary4(const CMat4& m) : m_(m) {
  if (unitarity_defect(m_) >= kDefectTolerance)
    throw NonUnitaryInput("matrix fails the unitarity check");
}

double overlap_fidelity(const Unitary4& u, const Unitary4& v) {
  return std::abs((u.matrix().adjoint() * v.matrix()).trace()) / 4.0;
}

}  // namespace ising2q
