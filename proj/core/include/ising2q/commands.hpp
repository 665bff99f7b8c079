#pragma once

#include <iosfwd>

#include "ising2q/config.hpp"

namespace ising2q {

// The CLI subcommands, exposed as library calls so they can be tested
// directly. CSV uses '.' decimals and 12 significant digits.

// columns: t_ns,F_one_rwa,F_two_rwa
void cmd_overlap(const RunConfig& cfg, std::ostream& csv);

// columns: t_ns,ReG1,ImG1,G2,ep,ep_envelope,is_pe
// sidecar: JSON with the perfect-entangler window boundaries (ns)
void cmd_invariants(const RunConfig& cfg, std::ostream& csv,
                    std::ostream& sidecar_json);

// JSON: process matrix, local-equivalence fidelity vs the target gate,
// maximizing rotations and invariants, for the analytic or numeric gate
void cmd_tomography(const RunConfig& cfg, std::ostream& json);

// JSON regime report
void cmd_regime(const RunConfig& cfg, std::ostream& json);

}  // namespace ising2q
