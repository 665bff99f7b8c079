#include "ising2q/propagator.hpp"

#include <algorithm>
#include <cmath>

#include "ising2q/errors.hpp"

namespace ising2q {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// U (U†U)^(-1/2): projects back onto the unitary group
CMat4 polar_renormalize(const CMat4& u) {
  const Eig4 eig = eig_hermitian(u.adjoint() * u);
  CMat4 inv_sqrt;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < 4; ++k)
        s += eig.vectors(r, k) * (1.0 / std::sqrt(eig.values[k])) *
             std::conj(eig.vectors(c, k));
      inv_sqrt(r, c) = s;
    }
  return u * inv_sqrt;
}

CMat4 propagate_raw(const std::function<CMat4(double)>& h_of_t, double t_start,
                    double t_end, const IntegratorConfig& cfg) {
  CMat4 u = CMat4::identity();
  const double span = t_end - t_start;
  if (span <= 0.0) return u;
  const long n = std::max(1L, static_cast<long>(std::ceil(span / cfg.dt)));
  const double step = span / static_cast<double>(n);
  for (long k = 0; k < n; ++k) {
    const double t_mid = t_start + (static_cast<double>(k) + 0.5) * step;
    u = expm_unitary(h_of_t(t_mid), step) * u;
    if (cfg.renormalize_every > 0 && (k + 1) % cfg.renormalize_every == 0)
      u = polar_renormalize(u);
  }
  return u;
}

}  // namespace

IntegratorConfig default_integrator(const SystemParams& p) {
  const DerivedParams d = derive(p);
  const double fastest =
      std::max({p.q1.omega, p.q2.omega, d.Omega1, d.Omega2});
  IntegratorConfig cfg;
  cfg.dt = (kTwoPi / fastest) / 200.0;
  return cfg;
}

void check_step(const SystemParams& p, const IntegratorConfig& cfg) {
  if (!(cfg.dt > 0.0)) throw StepTooLarge("dt must be > 0");
  const double max_omega = std::max(p.q1.omega, p.q2.omega);
  if (cfg.dt > (kTwoPi / max_omega) / 20.0)
    throw StepTooLarge("dt must resolve the drive period with >= 20 steps");
}

Unitary4 propagate(const std::function<CMat4(double)>& h_of_t, double t_end,
                   const IntegratorConfig& cfg) {
  if (!(cfg.dt > 0.0)) throw StepTooLarge("dt must be > 0");
  return Unitary4(propagate_raw(h_of_t, 0.0, t_end, cfg));
}

Unitary4 propagate_system(const SystemParams& p, double t_end,
                          const IntegratorConfig& cfg, bool echo) {
  check_step(p, cfg);
  auto ham = [&p](double t) { return hamiltonian_lab(p, t); };
  if (!echo) return propagate(ham, t_end, cfg);
  const SystemParams flipped = flip_drive_sign(p);
  auto ham_flipped = [&flipped](double t) { return hamiltonian_lab(flipped, t); };
  return propagate(ham, t_end / 2, cfg) * propagate(ham_flipped, t_end / 2, cfg);
}

std::vector<std::vector<OverlapPoint>> overlap_trace_multi(
    const SystemParams& p, const std::vector<AnalyticGateKind>& kinds,
    const std::vector<double>& t_grid, const IntegratorConfig& cfg, bool echo) {
  check_step(p, cfg);
  for (std::size_t k = 1; k < t_grid.size(); ++k)
    if (t_grid[k] < t_grid[k - 1])
      throw InvalidParams("time grid must be ascending");

  std::vector<std::vector<OverlapPoint>> out(kinds.size());
  for (auto& trace : out) trace.reserve(t_grid.size());

  // march the numeric propagator once over the grid; with echo each grid
  // time needs the two half-duration propagators, so march over t/2 for
  // both drive signs
  const SystemParams flipped = flip_drive_sign(p);
  auto ham = [&p](double t) { return hamiltonian_lab(p, t); };
  auto ham_flipped = [&flipped](double t) { return hamiltonian_lab(flipped, t); };

  CMat4 u_plus = CMat4::identity();
  CMat4 u_minus = CMat4::identity();
  double t_prev = 0.0;
  for (double t : t_grid) {
    const double target = echo ? t / 2 : t;
    if (target > t_prev) {
      u_plus = propagate_raw(ham, t_prev, target, cfg) * u_plus;
      if (echo)
        u_minus = propagate_raw(ham_flipped, t_prev, target, cfg) * u_minus;
      t_prev = target;
    }
    const Unitary4 numeric =
        echo ? Unitary4(u_plus) * Unitary4(u_minus) : Unitary4(u_plus);
    for (std::size_t k = 0; k < kinds.size(); ++k) {
      const Unitary4 approx =
          echo ? rotary_echo(kinds[k], p, t) : analytic_gate(kinds[k], p, t);
      out[k].push_back({t, overlap_fidelity(approx, numeric)});
    }
  }
  return out;
}

std::vector<OverlapPoint> overlap_trace(const SystemParams& p,
                                        AnalyticGateKind kind,
                                        const std::vector<double>& t_grid,
                                        const IntegratorConfig& cfg,
                                        bool echo) {
  return overlap_trace_multi(p, {kind}, t_grid, cfg, echo)[0];
}

}  // namespace ising2q
