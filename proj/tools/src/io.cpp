#include "kmm_cli/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "kmm/errors.hpp"

namespace kmm::cli {
namespace {

using nlohmann::json;

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

const json& field(const json& doc, const char* name) {
  if (!doc.is_object()) throw ParseError("expected a JSON object at top level");
  const auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

int qubit_count(const json& doc) {
  const json& n = field(doc, "n");
  if (!n.is_number_integer() || n.get<long long>() < 1) {
    throw ParseError("field 'n' must be a positive integer");
  }
  const auto value = n.get<long long>();
  if (value > 64) throw ValidationError("field 'n' is too large");
  return static_cast<int>(value);
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError(where + ": non-finite value");
  return x;
}

Amplitude amplitude(const json& v, const std::string& where) {
  if (v.is_number()) return {number(v, where), 0.0};
  if (v.is_array() && v.size() == 2) return {number(v[0], where + "[0]"), number(v[1], where + "[1]")};
  throw ParseError(where + ": expected a number or a [re, im] pair");
}

std::vector<Amplitude> amplitude_list(const json& arr, const std::string& name, std::size_t expected) {
  if (!arr.is_array()) throw ParseError("field '" + name + "' must be an array");
  if (arr.size() != expected) {
    throw DimensionError("field '" + name + "' has " + std::to_string(arr.size()) +
                         " entries, expected " + std::to_string(expected));
  }
  std::vector<Amplitude> out;
  out.reserve(expected);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(amplitude(arr[i], name + "[" + std::to_string(i) + "]"));
  }
  return out;
}

bool wants_normalize(const json& doc) {
  const auto it = doc.find("normalize");
  if (it == doc.end()) return false;
  if (!it->is_boolean()) throw ParseError("field 'normalize' must be a boolean");
  return it->get<bool>();
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), line_of_offset(text, e.byte));
  }
}

StateVector state_from_json(const json& doc) {
  const int n = qubit_count(doc);
  if (n > 30) throw ResourceError("state vectors are capped at 30 qubits");
  auto amps = amplitude_list(field(doc, "amplitudes"), "amplitudes", std::size_t{1} << n);
  if (wants_normalize(doc)) return StateVector::normalized(n, std::move(amps));
  return StateVector(n, std::move(amps));
}

bool is_symmetric_document(const json& doc) { return doc.is_object() && doc.contains("format"); }

SymmetricState symmetric_from_json(const json& doc) {
  const int n = qubit_count(doc);
  if (n > kMaxSymmetricQubits) throw ResourceError("symmetric states are capped at 31 qubits");
  const json& fmt = field(doc, "format");
  if (!fmt.is_string()) throw ParseError("field 'format' must be a string");
  const std::string format = fmt.get<std::string>();
  const json& data = field(doc, "data");
  if (!data.is_array()) throw ParseError("field 'data' must be an array");

  if (format == "dicke") {
    auto d = amplitude_list(data, "data", static_cast<std::size_t>(n) + 1);
    if (wants_normalize(doc)) return SymmetricState::normalized(n, std::move(d));
    return SymmetricState(n, std::move(d));
  }
  if (data.size() != static_cast<std::size_t>(n)) {
    throw DimensionError("field 'data' has " + std::to_string(data.size()) + " entries, expected " +
                         std::to_string(n));
  }
  if (format == "majorana_roots") {
    MajoranaSpec spec;
    spec.n = n;
    for (std::size_t i = 0; i < data.size(); ++i) {
      const std::string where = "data[" + std::to_string(i) + "]";
      if (data[i].is_string()) {
        if (data[i].get<std::string>() != "inf") throw ParseError(where + ": only \"inf\" is accepted as a string");
        ++spec.roots_at_infinity;
      } else {
        spec.finite_roots.push_back(amplitude(data[i], where));
      }
    }
    return dicke_from_majorana(spec);
  }
  if (format == "majorana_xyz") {
    std::vector<Point3> pts;
    for (std::size_t i = 0; i < data.size(); ++i) {
      const std::string where = "data[" + std::to_string(i) + "]";
      if (!data[i].is_array() || data[i].size() != 3) throw ParseError(where + ": expected [x, y, z]");
      pts.push_back({number(data[i][0], where), number(data[i][1], where), number(data[i][2], where)});
    }
    return state_from_points(pts);
  }
  throw ParseError("unknown format '" + format + "' (dicke, majorana_roots, majorana_xyz)");
}

std::vector<PauliOperator> parse_group_text(std::string_view text) {
  std::vector<PauliOperator> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    try {
      out.push_back(PauliOperator::parse(line));
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), line_no);
    }
    if (out.back().num_qubits() != out.front().num_qubits()) {
      throw ParseError("generator length differs from the first generator", line_no);
    }
  }
  if (out.empty()) throw ParseError("group file has no generators");
  return out;
}

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string bloch_csv(const BlochVector& r) {
  const int n = r.num_qubits();
  std::string out = "index_string,lambda,weight,parity,value\n";
  for (const auto& [idx, value] : r.components()) {
    out += packed_index_string(n, idx) + "," + quoted(packed_lambda(n, idx).to_string()) + "," +
           std::to_string(packed_weight(idx)) + "," + std::string(to_string(packed_lambda(n, idx).parity())) +
           "," + format_double(value) + "\n";
  }
  return out;
}

std::string structure_csv(const LambdaComponentTable& table) {
  std::string out = "lambda,multiplicity,parity,weight,value\n";
  for (const auto& e : table.entries()) {
    out += quoted(e.lambda.to_string()) + "," + std::to_string(e.multiplicity) + "," +
           std::string(to_string(e.parity)) + "," + std::to_string(e.weight) + "," +
           format_double(e.value.real()) + "\n";
  }
  return out;
}

}  // namespace kmm::cli
