#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "kmm/bloch.hpp"
#include "kmm/pauli.hpp"
#include "kmm/symmetric.hpp"

namespace kmm::cli {

std::string read_text_file(const std::filesystem::path& path);
// Wraps nlohmann parse errors into ParseError with a 1-based line number.
nlohmann::json parse_json(std::string_view text);

// {n, amplitudes: [[re, im], ...], normalize?: bool}; plain numbers are
// accepted as real amplitudes. Without "normalize": true the vector must be
// unit-norm within 1e-12.
StateVector state_from_json(const nlohmann::json& doc);

// {n, format: "dicke" | "majorana_roots" | "majorana_xyz", data, normalize?}
//   dicke          : n+1 amplitudes
//   majorana_roots : n entries, each [re, im] or the string "inf"
//   majorana_xyz   : n points [x, y, z] on the unit sphere
SymmetricState symmetric_from_json(const nlohmann::json& doc);

// True when the document carries a "format" field.
bool is_symmetric_document(const nlohmann::json& doc);

// One Pauli literal per line; '#' starts a comment.
std::vector<PauliOperator> parse_group_text(std::string_view text);

std::string bloch_csv(const BlochVector& r);
std::string structure_csv(const LambdaComponentTable& table);

// Shortest round-trip representation of a double.
std::string format_double(double x);

}  // namespace kmm::cli
