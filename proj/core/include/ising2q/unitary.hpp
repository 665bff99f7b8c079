#pragma once

#include "ising2q/linalg.hpp"

namespace ising2q {

// 4x4 unitary with the invariant max|U†U - I| < 1e-9 enforced on
// construction (throws NonUnitaryInput).
class Unitary4 {
 public:
  static constexpr double kDefectTolerance = 1e-9;

  explicit Unitary4(const CMat4& m);

  const CMat4& matrix() const { return m_; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  static Unitary4 identity() { return Unitary4(CMat4::identity()); }

  friend Unitary4 operator*(const Unitary4& x, const Unitary4& y) {
    return Unitary4(x.m_ * y.m_);
  }

 private:
  CMat4 m_;
};

// F = |tr(u† v)| / 4, in [0, 1]; symmetric and global-phase invariant
double overlap_fidelity(const Unitary4& u, const Unitary4& v);

}  // namespace ising2q
