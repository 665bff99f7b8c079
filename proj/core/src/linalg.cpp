#include "ising2q/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ising2q/errors.hpp"

namespace ising2q {

namespace {
constexpr cplx kI{0.0, 1.0};
}

CMat2 pauli(Pauli p) {
  CMat2 m;
  switch (p) {
    case Pauli::I:
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case Pauli::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case Pauli::Y:
      m(0, 1) = -kI;
      m(1, 0) = kI;
      break;
    case Pauli::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

CMat4 kron(const CMat2& x, const CMat2& y) {
  CMat4 m;
  for (std::size_t i1 = 0; i1 < 2; ++i1)
    for (std::size_t i2 = 0; i2 < 2; ++i2)
      for (std::size_t j1 = 0; j1 < 2; ++j1)
        for (std::size_t j2 = 0; j2 < 2; ++j2)
          m(2 * i1 + i2, 2 * j1 + j2) = x(i1, j1) * y(i2, j2);
  return m;
}

const std::array<CMat4, 16>& pauli_basis() {
  static const std::array<CMat4, 16> basis = [] {
    std::array<CMat4, 16> b;
    const Pauli axes[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        b[4 * i + j] = kron(pauli(axes[i]), pauli(axes[j]));
    return b;
  }();
  return basis;
}

const CMat4& pauli2(Pauli a, Pauli b) {
  return pauli_basis()[4 * static_cast<std::size_t>(a) +
                       static_cast<std::size_t>(b)];
}

std::array<cplx, 16> pauli_coefficients(const CMat4& m) {
  std::array<cplx, 16> c{};
  const auto& basis = pauli_basis();
  for (std::size_t k = 0; k < 16; ++k) {
    // basis elements are hermitian, so E† M == E M
    c[k] = (basis[k] * m).trace() / 4.0;
  }
  return c;
}

CMat2 rot_x(double angle) {
  CMat2 m;
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  m(0, 0) = c;
  m(0, 1) = -kI * s;
  m(1, 0) = -kI * s;
  m(1, 1) = c;
  return m;
}

CMat2 rot_y(double angle) {
  CMat2 m;
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  m(0, 0) = c;
  m(0, 1) = -s;
  m(1, 0) = s;
  m(1, 1) = c;
  return m;
}

CMat2 rot_z(double angle) {
  CMat2 m;
  m(0, 0) = std::exp(-kI * (angle / 2));
  m(1, 1) = std::exp(kI * (angle / 2));
  return m;
}

bool is_hermitian(const CMat4& m, double rel_tol) {
  const double scale = std::max(m.max_abs(), 1e-300);
  return max_abs_diff(m, m.adjoint()) <= rel_tol * scale;
}

namespace {

void require_hermitian(const CMat4& m) {
  if (!is_hermitian(m))
    throw NonHermitianInput("matrix fails the hermiticity check");
}

}  // namespace

Eig4 eig_hermitian(const CMat4& h) {
  require_hermitian(h);

  // symmetrize to clear roundoff asymmetry
  CMat4 a;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      a(r, c) = 0.5 * (h(r, c) + std::conj(h(c, r)));

  CMat4 v = CMat4::identity();
  const double scale = std::max(a.max_abs(), 1e-300);

  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = r + 1; c < 4; ++c)
        off = std::max(off, std::abs(a(r, c)));
    if (off <= 4e-16 * scale) break;

    for (std::size_t p = 0; p < 4; ++p) {
      for (std::size_t q = p + 1; q < 4; ++q) {
        const double apq = std::abs(a(p, q));
        if (apq <= 1e-18 * scale) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const cplx phase = a(p, q) / apq;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double zeta = (aqq - app) / (2.0 * apq);
        const double t =
            (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const cplx s = t * c * phase;

        // a <- G† a G with G = I except G(p,p)=c, G(p,q)=s,
        // G(q,p)=-conj(s), G(q,q)=c
        for (std::size_t k = 0; k < 4; ++k) {  // columns: a <- a G
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - std::conj(s) * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < 4; ++k) {  // rows: a <- G† a
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = std::conj(s) * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (std::size_t k = 0; k < 4; ++k) {  // v <- v G
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - std::conj(s) * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::array<std::size_t, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  Eig4 out;
  for (std::size_t k = 0; k < 4; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < 4; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

CMat4 expm_unitary(const CMat4& h, double t) {
  const Eig4 eig = eig_hermitian(h);
  std::array<cplx, 4> phases;
  for (std::size_t k = 0; k < 4; ++k)
    phases[k] = std::exp(-kI * (eig.values[k] * t));

  CMat4 u;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < 4; ++k)
        s += eig.vectors(r, k) * phases[k] * std::conj(eig.vectors(c, k));
      u(r, c) = s;
    }
  return u;
}

cplx det(const CMat4& m) {
  CMat4 lu = m;
  cplx d = 1.0;
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < 4; ++r)
      if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
    if (std::abs(lu(pivot, col)) == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t c = 0; c < 4; ++c) std::swap(lu(pivot, c), lu(col, c));
      d = -d;
    }
    d *= lu(col, col);
    for (std::size_t r = col + 1; r < 4; ++r) {
      const cplx f = lu(r, col) / lu(col, col);
      for (std::size_t c = col; c < 4; ++c) lu(r, c) -= f * lu(col, c);
    }
  }
  return d;
}

}  // namespace ising2q
