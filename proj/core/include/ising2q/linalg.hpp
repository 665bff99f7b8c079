#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace ising2q {

using cplx = std::complex<double>;

// Dense complex matrix of fixed dimension N (row-major, stack storage).
// Everything in this project is 2x2 or 4x4, so there is no dynamic path.
template <std::size_t N>
struct CMat {
  std::array<cplx, N * N> a{};

  cplx& operator()(std::size_t r, std::size_t c) { return a[r * N + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return a[r * N + c]; }

  static constexpr std::size_t dim() { return N; }

  static CMat zero() { return CMat{}; }

  static CMat identity() {
    CMat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  CMat adjoint() const {
    CMat m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
  }

  CMat transpose() const {
    CMat m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(c, r) = (*this)(r, c);
    return m;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const cplx& x : a) m = std::max(m, std::abs(x));
    return m;
  }

  friend CMat operator+(const CMat& x, const CMat& y) {
    CMat r;
    for (std::size_t i = 0; i < N * N; ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
  }

  friend CMat operator-(const CMat& x, const CMat& y) {
    CMat r;
    for (std::size_t i = 0; i < N * N; ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
  }

  friend CMat operator*(const CMat& x, const CMat& y) {
    CMat r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const cplx xik = x(i, k);
        for (std::size_t j = 0; j < N; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }

  friend CMat operator*(const cplx& s, const CMat& x) {
    CMat r;
    for (std::size_t i = 0; i < N * N; ++i) r.a[i] = s * x.a[i];
    return r;
  }

  friend CMat operator*(double s, const CMat& x) { return cplx(s, 0.0) * x; }

  CMat& operator+=(const CMat& y) {
    for (std::size_t i = 0; i < N * N; ++i) a[i] += y.a[i];
    return *this;
  }
};

using CMat2 = CMat<2>;
using CMat4 = CMat<4>;

template <std::size_t N>
double max_abs_diff(const CMat<N>& x, const CMat<N>& y) {
  return (x - y).max_abs();
}

// max-norm of U†U - I
template <std::size_t N>
double unitarity_defect(const CMat<N>& u) {
  return max_abs_diff(u.adjoint() * u, CMat<N>::identity());
}

enum class Pauli { I, X, Y, Z };

CMat2 pauli(Pauli p);

// Kronecker product with the first factor acting on qubit 1
CMat4 kron(const CMat2& x, const CMat2& y);

// sigma_a (x) sigma_b, cached
const CMat4& pauli2(Pauli a, Pauli b);

// two-qubit operator basis E_m = sigma_i (x) sigma_j with m = 4*i + j,
// axis order I, X, Y, Z (qubit 1 major)
const std::array<CMat4, 16>& pauli_basis();

// coefficients c_m = tr(E_m† M) / 4 of M in the basis above
std::array<cplx, 16> pauli_coefficients(const CMat4& m);

// single-qubit rotations exp(-i angle/2 sigma_axis), closed form
CMat2 rot_x(double angle);
CMat2 rot_y(double angle);
CMat2 rot_z(double angle);

// relative hermiticity check: max|M - M†| <= tol * max|M|
bool is_hermitian(const CMat4& m, double rel_tol = 1e-12);

struct Eig4 {
  std::array<double, 4> values;  // ascending
  CMat4 vectors;                 // unitary, eigenvectors in columns
};

// hermitian eigendecomposition via cyclic complex Jacobi rotations;
// the input is symmetrized as (h + h†)/2 before sweeping.
// throws NonHermitianInput if the symmetry check fails.
Eig4 eig_hermitian(const CMat4& h);

// exp(-i h t) for hermitian h, via eigendecomposition.
// throws NonHermitianInput.
CMat4 expm_unitary(const CMat4& h, double t);

// determinant by partial-pivot LU
cplx det(const CMat4& m);

}  // namespace ising2q
