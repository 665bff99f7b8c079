#include <benchmark/benchmark.h>

#include "ising2q/invariants.hpp"
#include "ising2q/model.hpp"
#include "ising2q/propagator.hpp"
#include "ising2q/rwa_gates.hpp"
#include "ising2q/tomography.hpp"

namespace {

constexpr double kMHz = 6.283185307179586e6;

ising2q::SystemParams reference_params() {
  ising2q::SystemParams p;
  p.q1 = {266.4 * kMHz, 69.3 * kMHz, 922.3 * kMHz, 960.0 * kMHz};
  p.q2 = {320.0 * kMHz, 36.0 * kMHz, 905.1 * kMHz, 960.0 * kMHz};
  p.alpha = 2.3 * kMHz;
  return p;
}

void bm_expm_unitary(benchmark::State& state) {
  const auto h = ising2q::hamiltonian_lab(reference_params(), 1e-9);
  for (auto _ : state)
    benchmark::DoNotOptimize(ising2q::expm_unitary(h, 5e-12));
}
BENCHMARK(bm_expm_unitary);

void bm_propagate_10ns(benchmark::State& state) {
  const auto p = reference_params();
  const auto cfg = ising2q::default_integrator(p);
  for (auto _ : state)
    benchmark::DoNotOptimize(ising2q::propagate_system(p, 10e-9, cfg));
}
BENCHMARK(bm_propagate_10ns);

void bm_analytic_gate(benchmark::State& state) {
  const auto p = reference_params();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        ising2q::u_two_rwa_zz(p, 615.7e-9));
}
BENCHMARK(bm_analytic_gate);

void bm_makhlin_invariants(benchmark::State& state) {
  const auto u = ising2q::u_two_rwa_zz(reference_params(), 615.7e-9);
  for (auto _ : state)
    benchmark::DoNotOptimize(ising2q::makhlin_invariants(u));
}
BENCHMARK(bm_makhlin_invariants);

void bm_closed_form_rotary(benchmark::State& state) {
  const auto p = reference_params();
  double t = 0.0;
  for (auto _ : state) {
    t += 1e-9;
    benchmark::DoNotOptimize(ising2q::closed_form_rotary(p, t));
  }
}
BENCHMARK(bm_closed_form_rotary);

void bm_chi_of_unitary(benchmark::State& state) {
  const auto u = ising2q::u_two_rwa_zz(reference_params(), 615.7e-9);
  for (auto _ : state)
    benchmark::DoNotOptimize(ising2q::chi_of_unitary(u));
}
BENCHMARK(bm_chi_of_unitary);

}  // namespace

BENCHMARK_MAIN();
