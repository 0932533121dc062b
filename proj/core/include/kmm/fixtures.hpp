#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kmm/balanced.hpp"
#include "kmm/bloch.hpp"

namespace kmm {

// A named reference state. `group` is present for stabilizer (balanced)
// states; `max_mm` is the known largest k for which the state is k-MM.
struct Fixture {
  std::string name;
  std::string description;
  StateVector state;
  std::optional<PauliSubgroup> group;
  int max_mm;
};

StateVector ghz_state(int n);
StateVector w_state(int n);

// Cyclic XZZXI stabilizers of the 5-qubit code, and its logical operators.
std::vector<PauliOperator> five_qubit_code_stabilizers();
PauliOperator five_qubit_logical_z();  // ZZZZZ
PauliOperator five_qubit_logical_x();  // XXXXX

// Names: bell_phi_plus, bell_phi_minus, bell_psi_plus, bell_psi_minus,
// ghz<N> (2 <= N <= 12), w3, L, HS, product00, zero_L, one_L, m6_phi_plus,
// m6_phi_minus, m6_psi_plus, m6_psi_minus. Lookup is case-insensitive.
std::vector<std::string> fixture_names();
Fixture fixture(std::string_view name);
std::vector<Fixture> fixture_states();

}  // namespace kmm
