#include "ising2q/gates.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace ising2q {

namespace {
constexpr cplx kI{0.0, 1.0};
}

Unitary4 gate_identity() { return Unitary4(CMat4::identity()); }

Unitary4 gate_cnot() {
  CMat4 m;
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 3) = 1.0;
  m(3, 2) = 1.0;
  return Unitary4(m);
}

Unitary4 gate_cphase() {
  CMat4 m;
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 2) = 1.0;
  m(3, 3) = -1.0;
  return Unitary4(m);
}

Unitary4 gate_iswap() {
  CMat4 m;
  m(0, 0) = 1.0;
  m(1, 2) = kI;
  m(2, 1) = kI;
  m(3, 3) = 1.0;
  return Unitary4(m);
}

Unitary4 gate_swap() {
  CMat4 m;
  m(0, 0) = 1.0;
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  m(3, 3) = 1.0;
  return Unitary4(m);
}

std::optional<Unitary4> named_gate(std::string_view name) {
  std::string up(name);
  std::transform(up.begin(), up.end(), up.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  if (up == "IDENTITY" || up == "I") return gate_identity();
  if (up == "CNOT") return gate_cnot();
  if (up == "CPHASE" || up == "CZ") return gate_cphase();
  if (up == "ISWAP") return gate_iswap();
  if (up == "SWAP") return gate_swap();
  return std::nullopt;
}

}  // namespace ising2q
