#include "ising2q/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "parallel_for.hpp"

namespace ising2q {

ProcessMatrix chi_of_unitary(const Unitary4& u) {
  const auto a = pauli_coefficients(u.matrix());
  ProcessMatrix chi;
  for (std::size_t m = 0; m < 16; ++m)
    for (std::size_t n = 0; n < 16; ++n) chi.at(m, n) = a[m] * std::conj(a[n]);
  return chi;
}

double process_fidelity(const ProcessMatrix& chi1, const ProcessMatrix& chi2) {
  cplx tr = 0.0;
  for (std::size_t m = 0; m < 16; ++m)
    for (std::size_t n = 0; n < 16; ++n) tr += chi1.at(m, n) * chi2.at(n, m);
  return tr.real();
}

namespace {

// zyz Euler rotation; the global phase drops out of |tr|
CMat2 euler(const double* angles) {
  return rot_z(angles[0]) * rot_y(angles[1]) * rot_z(angles[2]);
}

constexpr int kDim = 12;

struct Objective {
  CMat4 target;
  CMat4 u_dag;

  double fidelity(const std::array<double, kDim>& x) const {
    const CMat4 left = kron(euler(&x[0]), euler(&x[3]));
    const CMat4 right = kron(euler(&x[6]), euler(&x[9]));
    return std::abs((left * target * right * u_dag).trace()) / 4.0;
  }
};

struct NmResult {
  std::array<double, kDim> x{};
  double f = 0.0;  // fidelity (maximized)
  bool converged = false;
};

// standard Nelder-Mead on -fidelity; diameter measured in the max norm
NmResult nelder_mead(const Objective& obj, const std::array<double, kDim>& x0,
                     double step, double diameter_tol, int max_iter) {
  constexpr int n = kDim;
  std::vector<std::array<double, kDim>> v(n + 1, x0);
  std::vector<double> f(n + 1);
  for (int i = 0; i < n; ++i) v[i + 1][i] += step;
  for (int i = 0; i <= n; ++i) f[i] = -obj.fidelity(v[i]);

  std::array<int, n + 1> idx{};
  auto sort_idx = [&] {
    for (int i = 0; i <= n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return f[a] < f[b]; });
  };

  NmResult res;
  for (int iter = 0; iter < max_iter; ++iter) {
    sort_idx();
    const int best = idx[0], worst = idx[n], second = idx[n - 1];

    double diameter = 0.0;
    for (int i = 1; i <= n; ++i)
      for (int d = 0; d < n; ++d)
        diameter = std::max(diameter, std::abs(v[idx[i]][d] - v[best][d]));
    if (diameter < diameter_tol) {
      res.converged = true;
      break;
    }

    std::array<double, kDim> centroid{};
    for (int i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (int d = 0; d < n; ++d) centroid[d] += v[i][d];
    }
    for (int d = 0; d < n; ++d) centroid[d] /= n;

    auto blend = [&](double coef) {
      std::array<double, kDim> p;
      for (int d = 0; d < n; ++d)
        p[d] = centroid[d] + coef * (centroid[d] - v[worst][d]);
      return p;
    };

    const auto xr = blend(1.0);
    const double fr = -obj.fidelity(xr);
    if (fr < f[best]) {
      const auto xe = blend(2.0);
      const double fe = -obj.fidelity(xe);
      if (fe < fr) {
        v[worst] = xe;
        f[worst] = fe;
      } else {
        v[worst] = xr;
        f[worst] = fr;
      }
    } else if (fr < f[second]) {
      v[worst] = xr;
      f[worst] = fr;
    } else {
      const auto xc = blend(fr < f[worst] ? 0.5 : -0.5);
      const double fc = -obj.fidelity(xc);
      if (fc < std::min(fr, f[worst])) {
        v[worst] = xc;
        f[worst] = fc;
      } else {  // shrink toward the best vertex
        for (int i = 0; i <= n; ++i) {
          if (i == best) continue;
          for (int d = 0; d < n; ++d)
            v[i][d] = v[best][d] + 0.5 * (v[i][d] - v[best][d]);
          f[i] = -obj.fidelity(v[i]);
        }
      }
    }
  }

  sort_idx();
  res.x = v[idx[0]];
  res.f = -f[idx[0]];
  return res;
}

}  // namespace

LocalEquivalence local_equivalence_fidelity(const Unitary4& u,
                                            const Unitary4& target,
                                            std::uint64_t seed, int restarts) {
  const Objective obj{target.matrix(), u.matrix().adjoint()};
  const double pi = std::acos(-1.0);

  restarts = std::max(restarts, 1);
  std::vector<NmResult> runs(restarts);
  detail::parallel_for(static_cast<std::size_t>(restarts), [&](std::size_t r) {
    std::array<double, kDim> x0{};
    if (r > 0) {
      // fixed per-restart stream keeps results independent of scheduling
      std::mt19937_64 rng(seed + r);
      std::uniform_real_distribution<double> angle(-pi, pi);
      for (double& x : x0) x = angle(rng);
    }
    runs[r] = nelder_mead(obj, x0, 0.5, 1e-8, 5000);
  });

  NmResult best;
  best.f = -1.0;
  bool any_converged = false;
  for (const NmResult& r : runs) {
    any_converged = any_converged || r.converged;
    if (r.f > best.f) best = r;
  }

  // polish around the winner with shrinking simplices
  for (double step : {5e-2, 5e-3, 5e-4}) {
    const NmResult p = nelder_mead(obj, best.x, step, 1e-12, 4000);
    any_converged = any_converged || p.converged;
    if (p.f > best.f) best = p;
  }

  LocalEquivalence out;
  out.fidelity = best.f;
  out.converged = any_converged;
  out.rotations = {euler(&best.x[0]), euler(&best.x[3]), euler(&best.x[6]),
                   euler(&best.x[9])};
  return out;
}

}  // namespace ising2q
