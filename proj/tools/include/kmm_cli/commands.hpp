#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kmm/bloch.hpp"
#include "kmm/symmetric.hpp"

namespace kmm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitResource = 3;

// A state resolved from --state FILE or --fixture NAME. Symmetric inputs
// keep their Dicke form; `state` is filled when n fits the dense cap.
struct LoadedInput {
  std::string descriptor;
  std::optional<StateVector> state;
  std::optional<SymmetricState> symmetric;
};

// Symmetric names: psi4..psi12, the solids (tetrahedron, octahedron, cube,
// icosahedron, dodecahedron) and ghz<N>; every other name goes to the
// fixture catalogue.
LoadedInput load_input(const std::string& state_file, const std::string& fixture_name);

// Runs one command line (args excludes the program name). Output is written
// only when the command succeeds; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kmm::cli
