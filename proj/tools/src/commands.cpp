#include "kmm_cli/commands.hpp"

#include <array>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kmm/balanced.hpp"
#include "kmm/bounds.hpp"
#include "kmm/errors.hpp"
#include "kmm/fixtures.hpp"
#include "kmm_cli/io.hpp"

namespace kmm::cli {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::optional<SymmetricState> symmetric_ghz(const std::string& key) {
  if (key.rfind("ghz", 0) != 0 || key.size() < 4 || key.size() > 5 ||
      key.find_first_not_of("0123456789", 3) != std::string::npos) {
    return std::nullopt;
  }
  const int n = std::stoi(key.substr(3));
  if (n < 2 || n > kMaxSymmetricQubits) return std::nullopt;
  const std::pair<int, Amplitude> terms[] = {{0, 1.0}, {n, 1.0}};
  return SymmetricState::from_terms(n, terms);
}

std::optional<SymmetricState> symmetric_fixture(const std::string& key) {
  for (const auto& row : reference_rows()) {
    if (row.name == key) return reference_state(key);
  }
  for (const char* solid : {"tetrahedron", "octahedron", "cube", "icosahedron", "dodecahedron"}) {
    if (key == solid) return state_from_points(platonic_points(solid));
  }
  return symmetric_ghz(key);
}

std::array<double, 3> parse_rotation(const std::string& text) {
  std::array<double, 3> angles{};
  std::stringstream ss(text);
  std::string part;
  std::size_t i = 0;
  while (std::getline(ss, part, ',')) {
    if (i == 3) throw ValidationError("--rotate takes exactly three angles a,b,c");
    try {
      std::size_t used = 0;
      angles[i] = std::stod(part, &used);
      if (part.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw ValidationError("--rotate: cannot parse angle '" + part + "'");
    }
    ++i;
  }
  if (i != 3) throw ValidationError("--rotate takes exactly three angles a,b,c");
  return angles;
}

Json census_json(const LambdaComponentTable& table, double tol) {
  const auto census = odd_census(table, tol);
  Json j;
  j["n"] = census.n;
  j["zero_odd"] = census.zero_odd;
  j["total_odd"] = census.total_odd;
  j["ratio"] = census.ratio;
  j["threshold"] = census.threshold;
  if (table.num_qubits() >= 2) {
    const auto w = two_body_witness(table);
    j["witness_lambda"] = w.witness_lambda.to_string();
    j["witness_value"] = w.value;
  }
  j["max_imaginary"] = table.max_imaginary();
  return j;
}

const SymmetricState& require_symmetric(const LoadedInput& in) {
  if (!in.symmetric) {
    throw ValidationError(in.descriptor + " is not a symmetric state; use a file with a \"format\" field");
  }
  return *in.symmetric;
}

struct InputOptions {
  std::string state_file;
  std::string fixture;
};

void add_input_options(CLI::App* cmd, InputOptions& opts) {
  auto* file = cmd->add_option("--state", opts.state_file, "state JSON file");
  auto* fix = cmd->add_option("--fixture", opts.fixture, "named reference state");
  file->excludes(fix);
}

// ---- commands -------------------------------------------------------------

struct CheckOptions {
  InputOptions input;
  int kmax = 0;
  double tol = kDefaultZeroTolerance;
  bool csv = false;
  bool timings = false;
};

std::string cmd_check(const CheckOptions& o) {
  const auto t0 = Clock::now();
  const LoadedInput in = load_input(o.input.state_file, o.input.fixture);
  if (!in.state) throw ResourceError("check needs a state vector; n exceeds the dense cap");
  const int n = in.state->num_qubits();
  const BlochVector r = bloch_from_state(*in.state, o.tol);
  const double t_bloch = elapsed_ms(t0);
  if (o.csv) return bloch_csv(r);

  const int kmax = o.kmax > 0 ? o.kmax : n / 2;
  if (kmax > n) throw ValidationError("--kmax exceeds n");
  const auto t1 = Clock::now();
  const auto purity = purity_residuals(r);
  Json ladder = Json::array();
  for (int k = 1; k <= kmax; ++k) {
    const auto rep = is_k_mm(r, k, o.tol);
    Json step;
    step["k"] = k;
    step["verdict"] = rep.verdict;
    step["max_violation"] = rep.max_violation;
    step["violation_count"] = rep.violation_count;
    ladder.push_back(step);
  }
  const double t_ladder = elapsed_ms(t1);

  Json report;
  report["input"] = in.descriptor;
  report["n"] = n;
  report["tolerance"] = o.tol;
  report["purity"] = {{"norm_residual", purity.norm_residual},
                      {"orientation_residual", purity.orientation_residual}};
  report["ladder"] = ladder;
  if (in.symmetric) report["census"] = census_json(lambda_components(*in.symmetric), o.tol);
  if (o.timings) report["timings_ms"] = {{"bloch", t_bloch}, {"ladder", t_ladder}};
  return report.dump(2) + "\n";
}

struct BalancedOptions {
  std::string group_file;
  std::string fixture;
};

std::string cmd_balanced(const BalancedOptions& o) {
  std::vector<PauliOperator> gens;
  std::string descriptor;
  if (!o.group_file.empty()) {
    gens = parse_group_text(read_text_file(o.group_file));
    descriptor = "file:" + o.group_file;
  } else if (!o.fixture.empty()) {
    const Fixture f = fixture(o.fixture);
    if (!f.group) throw ValidationError("fixture " + f.name + " has no stabilizer group");
    gens = f.group->generators();
    descriptor = "fixture:" + f.name;
  } else {
    throw ValidationError("balanced needs --group FILE or --fixture NAME");
  }
  const PauliSubgroup group = close(gens);
  const auto check = validate_balanced(group);
  const auto& flags = group.flags();

  Json report;
  report["input"] = descriptor;
  report["n"] = group.num_qubits();
  Json g = Json::array();
  for (const auto& p : gens) g.push_back(p.to_string());
  report["generators"] = g;
  report["order"] = flags.order;
  report["flags"] = {{"is_closed", flags.is_closed},
                     {"is_abelian", flags.is_abelian},
                     {"is_involutive", flags.is_involutive},
                     {"is_hermitian", flags.is_hermitian}};
  report["pure"] = check.pure;
  report["reasons"] = check.reasons;
  report["min_nonidentity_weight"] = min_nonidentity_weight(group);
  report["mm_level"] = mm_level(group);
  if (check.pure && group.num_qubits() <= kDenseQubitCap) {
    const BalancedState st = build_state(group);
    int boundary = 0;
    for (int k = 1; k <= group.num_qubits() / 2; ++k) {
      if (!is_k_mm(st.bloch, k).verdict) break;
      boundary = k;
    }
    report["ladder_boundary"] = boundary;
  }
  return report.dump(2) + "\n";
}

struct SymOptions {
  InputOptions input;
  double tol = kDefaultZeroTolerance;
  std::string rotate;
  bool timings = false;
};

SymmetricState rotated_input(const SymOptions& o, LoadedInput& in, std::optional<std::array<double, 3>>& angles) {
  SymmetricState s = require_symmetric(in);
  if (!o.rotate.empty()) {
    angles = parse_rotation(o.rotate);
    s = rotate(s, (*angles)[0], (*angles)[1], (*angles)[2]);
  }
  return s;
}

std::string cmd_symcensus(const SymOptions& o) {
  const auto t0 = Clock::now();
  LoadedInput in = load_input(o.input.state_file, o.input.fixture);
  std::optional<std::array<double, 3>> angles;
  const SymmetricState s = rotated_input(o, in, angles);
  const auto table = lambda_components(s);
  Json report;
  report["input"] = in.descriptor;
  const Json census = census_json(table, o.tol);
  for (const auto& [key, value] : census.items()) report[key] = value;
  if (angles) report["rotation"] = *angles;
  if (o.timings) report["timings_ms"] = {{"census", elapsed_ms(t0)}};
  return report.dump(2) + "\n";
}

std::string cmd_structure(const SymOptions& o) {
  LoadedInput in = load_input(o.input.state_file, o.input.fixture);
  std::optional<std::array<double, 3>> angles;
  return structure_csv(lambda_components(rotated_input(o, in, angles)));
}

struct BoundsOptions {
  int n_max = 0;
  std::string table;
  std::string out;
};

std::string cmd_bounds(const BoundsOptions& o) {
  if (o.n_max < 1 || o.n_max > 4096) throw ValidationError("--n-max must be in [1, 4096]");
  std::vector<CodeTableEntry> table;
  if (!o.table.empty()) {
    std::istringstream csv(read_text_file(o.table));
    table = ingest_code_table(csv);
  }
  Json series = Json::array();
  for (const auto& s : bounds_chart(o.n_max, table)) {
    Json pts = Json::array();
    for (const auto& [n, k] : s.points) pts.push_back({n, k});
    series.push_back({{"name", s.name}, {"points", pts}});
  }
  Json chart;
  chart["x0"] = root_x0(1e-12);
  chart["series"] = series;
  return chart.dump(2) + "\n";
}

}  // namespace

LoadedInput load_input(const std::string& state_file, const std::string& fixture_name) {
  LoadedInput in;
  if (!state_file.empty()) {
    const Json doc = parse_json(read_text_file(state_file));
    in.descriptor = "file:" + state_file;
    if (is_symmetric_document(doc)) {
      in.symmetric = symmetric_from_json(doc);
    } else {
      in.state = state_from_json(doc);
    }
  } else if (!fixture_name.empty()) {
    const std::string key = lower(fixture_name);
    in.descriptor = "fixture:" + key;
    in.symmetric = symmetric_fixture(key);
    // GHZ states are also dense fixtures; those keep the catalogue vector.
    if (!in.symmetric || key.rfind("ghz", 0) == 0) {
      if (!in.symmetric || in.symmetric->num_qubits() <= kDenseQubitCap) in.state = fixture(key).state;
    }
  } else {
    throw ValidationError("an input is required: --state FILE or --fixture NAME");
  }
  if (!in.state && in.symmetric && in.symmetric->num_qubits() <= kDenseQubitCap) {
    in.state = to_state_vector(*in.symmetric);
  }
  return in;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-MM analysis of generalized Bloch vectors"};
  app.require_subcommand(1);

  CheckOptions check;
  auto* c = app.add_subcommand("check", "k-MM ladder and purity residuals of a state");
  add_input_options(c, check.input);
  c->add_option("--kmax", check.kmax, "largest k in the ladder (default floor(n/2))")->check(CLI::PositiveNumber);
  c->add_option("--tol", check.tol, "zero tolerance")->check(CLI::NonNegativeNumber);
  auto* json_flag = c->add_flag("--json", "JSON report (default)");
  c->add_flag("--csv", check.csv, "dump Bloch components as CSV")->excludes(json_flag);
  c->add_flag("--timings", check.timings, "include wall-clock timings");

  BalancedOptions bal;
  auto* b = app.add_subcommand("balanced", "closure, balanced-state validation and mm level of a Pauli group");
  b->add_option("--group", bal.group_file, "generator file, one Pauli literal per line");
  b->add_option("--fixture", bal.fixture, "fixture with a stabilizer group");

  SymOptions sym;
  auto* s = app.add_subcommand("symcensus", "vanishing odd lambda-components of a symmetric state");
  add_input_options(s, sym.input);
  s->add_option("--tol", sym.tol, "zero tolerance")->check(CLI::NonNegativeNumber);
  s->add_option("--rotate", sym.rotate, "Euler angles a,b,c of U = Rz(a) Ry(b) Rz(c)");
  s->add_flag("--timings", sym.timings, "include wall-clock timings");

  SymOptions st;
  auto* t = app.add_subcommand("structure", "lambda-component table of a symmetric state as CSV");
  add_input_options(t, st.input);
  t->add_option("--rotate", st.rotate, "Euler angles a,b,c of U = Rz(a) Ry(b) Rz(c)");

  BoundsOptions bo;
  auto* bd = app.add_subcommand("bounds", "Hamming / Gilbert-Varshamov chart data");
  bd->add_option("--n-max", bo.n_max, "largest n")->required();
  bd->add_option("--table", bo.table, "CSV n,k_lower,k_upper");
  bd->add_option("--out", bo.out, "output file (default stdout)");

  std::vector<const char*> argv{"kmm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    std::string text;
    if (c->parsed()) {
      text = cmd_check(check);
    } else if (b->parsed()) {
      text = cmd_balanced(bal);
    } else if (s->parsed()) {
      text = cmd_symcensus(sym);
    } else if (t->parsed()) {
      text = cmd_structure(st);
    } else if (bd->parsed()) {
      text = cmd_bounds(bo);
      if (!bo.out.empty()) {
        std::ofstream file(bo.out, std::ios::binary);
        if (!(file << text)) throw ValidationError("cannot write '" + bo.out + "'");
        return kExitOk;
      }
    }
    out << text;
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  }
}

}  // namespace kmm::cli
