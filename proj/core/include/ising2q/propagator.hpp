#pragma once

#include <functional>
#include <vector>

#include "ising2q/model.hpp"
#include "ising2q/rwa_gates.hpp"
#include "ising2q/unitary.hpp"

namespace ising2q {

struct IntegratorConfig {
  double dt = 0.0;              // step size (s)
  int renormalize_every = 1000; // polar re-projection cadence, <= 0 disables
};

// dt = (2pi / max(omega_i, Omega_i)) / 200
IntegratorConfig default_integrator(const SystemParams& p);

// enforce dt > 0 and dt <= (2pi / max omega_i) / 20 (at least 20 steps per
// drive period); throws StepTooLarge
void check_step(const SystemParams& p, const IntegratorConfig& cfg);

// Solve i dU/dt = H(t) U, U(0) = I, up to t_end with midpoint exponential
// steps U <- exp(-i H(t + dt/2) dt) U. Each step is unitary up to the
// accuracy of the hermitian exponential; every renormalize_every steps U is
// re-projected onto the unitary group via U (U†U)^(-1/2).
Unitary4 propagate(const std::function<CMat4(double)>& h_of_t, double t_end,
                   const IntegratorConfig& cfg);

// lab-frame propagation for a parameter set; echo composes the two
// half-duration propagators with the drive sign flipped in the first half:
// U(+j, t/2) * U(-j, t/2)
Unitary4 propagate_system(const SystemParams& p, double t_end,
                          const IntegratorConfig& cfg, bool echo = false);

struct OverlapPoint {
  double t = 0.0;
  double fidelity = 0.0;
};

// overlap of the chosen analytic propagator against the numerically exact
// one at each grid time (grid must be ascending; the numeric propagation is
// done once, incrementally)
std::vector<OverlapPoint> overlap_trace(const SystemParams& p,
                                        AnalyticGateKind kind,
                                        const std::vector<double>& t_grid,
                                        const IntegratorConfig& cfg,
                                        bool echo = false);

// same, for several analytic forms sharing one numeric propagation;
// result[k] corresponds to kinds[k]
std::vector<std::vector<OverlapPoint>> overlap_trace_multi(
    const SystemParams& p, const std::vector<AnalyticGateKind>& kinds,
    const std::vector<double>& t_grid, const IntegratorConfig& cfg,
    bool echo = false);

}  // namespace ising2q
