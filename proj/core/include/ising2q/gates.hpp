#pragma once

#include <optional>
#include <string_view>

#include "ising2q/unitary.hpp"

namespace ising2q {

// standard two-qubit gates in the logical basis
Unitary4 gate_identity();
Unitary4 gate_cnot();
Unitary4 gate_cphase();  // diag(1, 1, 1, -1)
Unitary4 gate_iswap();
Unitary4 gate_swap();

// lookup by (case-insensitive) name: IDENTITY, CNOT, CPHASE, ISWAP, SWAP
std::optional<Unitary4> named_gate(std::string_view name);

}  // namespace ising2q
