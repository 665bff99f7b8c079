#pragma once

#include <utility>
#include <vector>

#include "ising2q/model.hpp"
#include "ising2q/unitary.hpp"

namespace ising2q {

// Local invariants (G1 complex, G2 real). Together they classify the
// nonlocal content of a two-qubit gate: local pre/post rotations and global
// phases leave them unchanged.
struct InvariantPair {
  cplx g1{1.0, 0.0};
  double g2 = 3.0;
};

// the logical -> Bell ("magic") basis change Q; fixed convention
// (1/sqrt2) [[1,0,0,i],[0,i,1,0],[0,i,-1,0],[1,0,0,-i]]
const CMat4& bell_basis_transform();

// G1 = tr^2[m] / (16 det U), G2 = (tr^2[m] - tr[m^2]) / (4 det U),
// with m(U) = (Q†UQ)^T Q†UQ
InvariantPair makhlin_invariants(const Unitary4& u);

// ep = 2/9 (1 - |g1|), |g1| clamped into [0, 1]
double entangling_power(const cplx& g1);

// ep in [1/6, 2/9] and g2 in [-1, 1], boundaries inclusive to 1e-9
bool is_perfect_entangler(const InvariantPair& inv);

// closed forms for the analytic gates (arguments as angular frequencies / s)

// xy+zz slow content (similar Rabi frequencies)
InvariantPair closed_form_equal_rabi(const SystemParams& p, double t);

// zz slow content: G1 = cos^2(psi), G2 = 2 + cos(2 psi),
// psi = h1 h2 alpha t / (O1 O2)
InvariantPair closed_form_zz(const SystemParams& p, double t);

// xy slow content for dissimilar splittings, theta = J1 J2 alpha t / (O1 O2):
// G1 = cos^4(theta), G2 = 1 + 2 cos(2 theta).
// (cos^4 is what direct evaluation of the invariants on the gate gives;
// an iswap-class gate appears at theta = pi/2.)
InvariantPair closed_form_dissimilar(const SystemParams& p, double t);

// echoed zz gate; invariants pick up a dependence on the drive frequency.
// requires w1 == w2 (throws UnequalDriveFrequencies)
InvariantPair closed_form_rotary(const SystemParams& p, double t);

struct EntanglingPowerPoint {
  double t = 0.0;
  InvariantPair invariants;   // echoed-gate invariants at t
  double ep = 0.0;            // entangling power at t
  double ep_envelope = 0.0;   // slow envelope from the zz closed form
  bool is_pe = false;
};

// per-time entangling power of the echoed zz gate plus its slow envelope
std::vector<EntanglingPowerPoint> entangling_power_trace(
    const SystemParams& p, const std::vector<double>& t_grid);

// maximal intervals of [t_start, t_end] where the slow envelope sits in
// [1/6, 2/9]; inside them the echoed gate can reach a perfect entangler
std::vector<std::pair<double, double>> entangling_windows(
    const SystemParams& p, double t_start, double t_end);

enum class GateClass { CnotCphase, Iswap, Identity, Swap, Generic };

std::string to_string(GateClass c);

GateClass classify_local_equivalence(const InvariantPair& inv,
                                     double tol = 0.05);

}  // namespace ising2q
