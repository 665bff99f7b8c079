#include "ising2q/invariants.hpp"

#include <algorithm>
#include <cmath>

#include "ising2q/errors.hpp"

namespace ising2q {

namespace {
constexpr double kTwoNinths = 2.0 / 9.0;
constexpr double kEdgeTol = 1e-9;
}  // namespace

const CMat4& bell_basis_transform() {
  static const CMat4 q = [] {
    const double r = 1.0 / std::sqrt(2.0);
    const cplx i{0.0, 1.0};
    CMat4 m;
    m(0, 0) = r;       m(0, 3) = r * i;
    m(1, 1) = r * i;   m(1, 2) = r;
    m(2, 1) = r * i;   m(2, 2) = -r;
    m(3, 0) = r;       m(3, 3) = -r * i;
    return m;
  }();
  return q;
}

InvariantPair makhlin_invariants(const Unitary4& u) {
  const CMat4& q = bell_basis_transform();
  const CMat4 b = q.adjoint() * u.matrix() * q;
  const CMat4 m = b.transpose() * b;
  const cplx tr_m = m.trace();
  const cplx tr_m2 = (m * m).trace();
  const cplx d = det(u.matrix());
  InvariantPair inv;
  inv.g1 = tr_m * tr_m / (16.0 * d);
  const cplx g2 = (tr_m * tr_m - tr_m2) / (4.0 * d);
  inv.g2 = g2.real();  // imaginary residue is numerical noise for unitary input
  return inv;
}

double entangling_power(const cplx& g1) {
  const double a = std::min(std::abs(g1), 1.0);
  return kTwoNinths * (1.0 - a);
}

bool is_perfect_entangler(const InvariantPair& inv) {
  const double ep = entangling_power(inv.g1);
  return ep >= 1.0 / 6.0 - kEdgeTol && ep <= kTwoNinths + kEdgeTol &&
         inv.g2 >= -1.0 - kEdgeTol && inv.g2 <= 1.0 + kEdgeTol;
}

InvariantPair closed_form_equal_rabi(const SystemParams& p, double t) {
  const DerivedParams d = derive(p);
  const double b = p.alpha * t / (d.Omega1 * d.Omega2);
  const double hh = p.q1.h * p.q2.h;
  const double jj = p.q1.J * p.q2.J;
  InvariantPair inv;
  const double re =
      (std::cos(4.0 * (hh + jj) * b) + 6.0 * std::cos(2.0 * hh * b) +
       std::cos(4.0 * jj * b) + 8.0 * std::cos((hh + 2.0 * jj) * b)) /
      16.0;
  const double im = (-2.0 * std::sin(2.0 * hh * b) - std::sin(4.0 * jj * b) +
                     std::sin(4.0 * (hh + jj) * b)) /
                    16.0;
  inv.g1 = cplx(re, im);
  inv.g2 = std::cos(2.0 * hh * b) + 2.0 * std::cos((hh + 2.0 * jj) * b);
  return inv;
}

InvariantPair closed_form_zz(const SystemParams& p, double t) {
  const DerivedParams d = derive(p);
  const double psi = p.q1.h * p.q2.h * p.alpha * t / (d.Omega1 * d.Omega2);
  const double c = std::cos(psi);
  InvariantPair inv;
  inv.g1 = c * c;
  inv.g2 = 2.0 + std::cos(2.0 * psi);
  return inv;
}

InvariantPair closed_form_dissimilar(const SystemParams& p, double t) {
  const DerivedParams d = derive(p);
  const double th = p.q1.J * p.q2.J * p.alpha * t / (d.Omega1 * d.Omega2);
  const double c2 = std::cos(th) * std::cos(th);
  InvariantPair inv;
  inv.g1 = c2 * c2;
  inv.g2 = 1.0 + 2.0 * std::cos(2.0 * th);
  return inv;
}

InvariantPair closed_form_rotary(const SystemParams& p, double t) {
  if (p.q1.omega != p.q2.omega)
    throw UnequalDriveFrequencies(
        "the echoed closed form requires a common drive frequency");
  const DerivedParams d = derive(p);
  const double psi = p.q1.h * p.q2.h * p.alpha * t / (d.Omega1 * d.Omega2);
  const double cw = std::cos(p.q1.omega * t);
  const double half_sin = std::sin(psi / 2.0);
  InvariantPair inv;
  const double g1_root = 1.0 - cw + (3.0 + cw) * std::cos(psi);
  inv.g1 = g1_root * g1_root / 16.0;
  inv.g2 = 0.5 * (3.0 + std::cos(2.0 * psi) +
                  std::cos(psi) * (2.0 - 4.0 * cw * half_sin * half_sin));
  return inv;
}

std::vector<EntanglingPowerPoint> entangling_power_trace(
    const SystemParams& p, const std::vector<double>& t_grid) {
  std::vector<EntanglingPowerPoint> out(t_grid.size());
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    const double t = t_grid[k];
    EntanglingPowerPoint pt;
    pt.t = t;
    pt.invariants = closed_form_rotary(p, t);
    pt.ep = entangling_power(pt.invariants.g1);
    pt.ep_envelope = entangling_power(closed_form_zz(p, t).g1);
    pt.is_pe = is_perfect_entangler(pt.invariants);
    out[k] = pt;
  }
  return out;
}

std::vector<std::pair<double, double>> entangling_windows(
    const SystemParams& p, double t_start, double t_end) {
  std::vector<std::pair<double, double>> windows;
  const DerivedParams d = derive(p);
  const double rate = p.q1.h * p.q2.h * p.alpha / (d.Omega1 * d.Omega2);
  if (rate <= 0.0 || t_end <= t_start) return windows;

  // envelope ep = 2/9 sin^2(psi) with psi = rate * t; it sits in [1/6, 2/9]
  // exactly for psi in [pi/3, 2pi/3] modulo pi
  const double pi = std::acos(-1.0);
  const long k_max = static_cast<long>(std::floor(rate * t_end / pi));
  for (long k = 0; k <= k_max; ++k) {
    const double lo = (static_cast<double>(k) * pi + pi / 3.0) / rate;
    const double hi = (static_cast<double>(k) * pi + 2.0 * pi / 3.0) / rate;
    const double a = std::max(lo, t_start);
    const double b = std::min(hi, t_end);
    if (a < b) windows.emplace_back(a, b);
  }
  return windows;
}

std::string to_string(GateClass c) {
  switch (c) {
    case GateClass::CnotCphase: return "cnot_cphase";
    case GateClass::Iswap: return "iswap";
    case GateClass::Identity: return "identity";
    case GateClass::Swap: return "swap";
    case GateClass::Generic: return "generic";
  }
  return "unknown";
}

GateClass classify_local_equivalence(const InvariantPair& inv, double tol) {
  if (!(tol > 0.0)) throw InvalidParams("classification tolerance must be > 0");
  const cplx g1 = inv.g1;
  const double g2 = inv.g2;
  if (std::abs(g1) < tol && std::abs(g2 - 1.0) < tol) return GateClass::CnotCphase;
  if (std::abs(g1) < tol && std::abs(g2 + 1.0) < tol) return GateClass::Iswap;
  if (std::abs(g1 - 1.0) < tol && std::abs(g2 - 3.0) < tol)
    return GateClass::Identity;
  if (std::abs(g1 + 1.0) < tol && std::abs(g2 + 3.0) < tol)
    return GateClass::Swap;
  return GateClass::Generic;
}

}  // namespace ising2q
