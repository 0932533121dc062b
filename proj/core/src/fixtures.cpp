#include "kmm/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <numbers>

#include "kmm/errors.hpp"

namespace kmm {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::size_t basis_index(std::string_view bits) {
  std::size_t out = 0;
  for (char c : bits) out = (out << 1) | static_cast<std::size_t>(c == '1');
  return out;
}

using Terms = std::vector<std::pair<std::string_view, Amplitude>>;

StateVector from_terms(int n, const Terms& terms) {
  std::vector<Amplitude> amps(std::size_t{1} << n);
  for (const auto& [bits, amp] : terms) amps[basis_index(bits)] += amp;
  return StateVector::normalized(n, std::move(amps));
}

PauliOperator lit(std::string_view s) { return PauliOperator::parse(s); }

PauliSubgroup group_of(std::initializer_list<std::string_view> gens) {
  std::vector<PauliOperator> ops;
  for (auto g : gens) ops.push_back(lit(g));
  return close(ops);
}

PauliSubgroup ghz_group(int n) {
  std::vector<PauliOperator> gens;
  gens.push_back(lit(std::string(n, 'X')));
  for (int i = 0; i + 1 < n; ++i) {
    std::string s(n, 'I');
    s[i] = s[i + 1] = 'Z';
    gens.push_back(lit(s));
  }
  return close(gens);
}

PauliSubgroup logical_group(bool one) {
  auto gens = five_qubit_code_stabilizers();
  gens.push_back(five_qubit_logical_z().with_phase(one ? 2 : 0));
  return close(gens);
}

PauliSubgroup m6_group(int z_sign, int x_sign) {
  std::vector<PauliOperator> gens;
  for (const auto& s : five_qubit_code_stabilizers()) gens.push_back(lit("I" + s.to_string().substr(1)));
  gens.push_back(lit(std::string(z_sign < 0 ? "-" : "+") + "ZZZZZZ"));
  gens.push_back(lit(std::string(x_sign < 0 ? "-" : "+") + "XXXXXX"));
  return close(gens);
}

StateVector zero_logical() { return state_vector_of(logical_group(false)); }
StateVector one_logical() { return apply(five_qubit_logical_x(), zero_logical()); }

StateVector logical_bell(bool flip, int sign) {
  const StateVector zero = StateVector::basis(1, 0), one = StateVector::basis(1, 1);
  const StateVector zl = zero_logical(), ol = one_logical();
  const StateVector a = tensor(zero, flip ? ol : zl);
  const StateVector b = tensor(one, flip ? zl : ol);
  std::vector<Amplitude> amps(a.dimension());
  for (std::size_t i = 0; i < amps.size(); ++i) {
    amps[i] = a.amplitudes()[i] + static_cast<double>(sign) * b.amplitudes()[i];
  }
  return StateVector::normalized(6, std::move(amps));
}

}  // namespace

StateVector ghz_state(int n) {
  if (n < 2 || n > 20) throw ValidationError("GHZ fixture supports 2 <= n <= 20");
  std::vector<Amplitude> amps(std::size_t{1} << n);
  amps.front() = amps.back() = 1.0;
  return StateVector::normalized(n, std::move(amps));
}

StateVector w_state(int n) {
  if (n < 2 || n > 20) throw ValidationError("W fixture supports 2 <= n <= 20");
  std::vector<Amplitude> amps(std::size_t{1} << n);
  for (int q = 0; q < n; ++q) amps[std::size_t{1} << q] = 1.0;
  return StateVector::normalized(n, std::move(amps));
}

std::vector<PauliOperator> five_qubit_code_stabilizers() {
  return {lit("XZZXI"), lit("IXZZX"), lit("XIXZZ"), lit("ZXIXZ")};
}

PauliOperator five_qubit_logical_z() { return lit("ZZZZZ"); }
PauliOperator five_qubit_logical_x() { return lit("XXXXX"); }

std::vector<std::string> fixture_names() {
  return {"bell_phi_plus", "bell_phi_minus", "bell_psi_plus", "bell_psi_minus",
          "ghz3",          "ghz4",           "ghz5",          "ghz6",
          "ghz7",          "ghz8",           "w3",            "L",
          "HS",            "product00",      "zero_L",        "one_L",
          "m6_phi_plus",   "m6_phi_minus",   "m6_psi_plus",   "m6_psi_minus"};
}

Fixture fixture(std::string_view name) {
  const double h = 1.0 / std::numbers::sqrt2;
  const std::string key = lower(name);
  if (key == "bell_phi_plus") {
    return {"bell_phi_plus", "(|00>+|11>)/sqrt2", from_terms(2, {{"00", h}, {"11", h}}),
            group_of({"XX", "ZZ"}), 1};
  }
  if (key == "bell_phi_minus") {
    return {"bell_phi_minus", "(|00>-|11>)/sqrt2", from_terms(2, {{"00", h}, {"11", -h}}),
            group_of({"-XX", "ZZ"}), 1};
  }
  if (key == "bell_psi_plus") {
    return {"bell_psi_plus", "(|01>+|10>)/sqrt2", from_terms(2, {{"01", h}, {"10", h}}),
            group_of({"XX", "-ZZ"}), 1};
  }
  if (key == "bell_psi_minus") {
    return {"bell_psi_minus", "(|01>-|10>)/sqrt2", from_terms(2, {{"01", h}, {"10", -h}}),
            group_of({"-XX", "-ZZ"}), 1};
  }
  if (key.starts_with("ghz") && key.size() > 3) {
    int n = 0;
    try {
      n = std::stoi(key.substr(3));
    } catch (const std::exception&) {
      throw ValidationError("unknown fixture '" + std::string(name) + "'");
    }
    if (n < 2 || n > kDenseQubitCap) throw ValidationError("ghz<N> fixture needs 2 <= N <= 12");
    return {"ghz" + std::to_string(n), "(|0...0>+|1...1>)/sqrt2", ghz_state(n), ghz_group(n), 1};
  }
  if (key == "w3") {
    return {"w3", "(|001>+|010>+|100>)/sqrt3", w_state(3), std::nullopt, 0};
  }
  if (key == "l") {
    const Amplitude w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    const Amplitude a = 1.0 - w, b = w * w;
    return {"L", "4-qubit L state", from_terms(4, {{"0011", a}, {"1100", a}, {"0101", b},
                                                   {"0110", b}, {"1001", b}, {"1010", b},
                                                   {"0000", -b}, {"1111", -b}}),
            std::nullopt, 1};
  }
  if (key == "hs") {
    const Amplitude w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    return {"HS", "4-qubit Higuchi-Sudbery state",
            from_terms(4, {{"0011", 1.0}, {"1100", 1.0}, {"0101", w}, {"1010", w},
                           {"0110", w * w}, {"1001", w * w}}),
            std::nullopt, 1};
  }
  if (key == "product00") {
    return {"product00", "|00>", StateVector::basis(2, 0), group_of({"IZ", "ZI"}), 0};
  }
  if (key == "zero_l") {
    return {"zero_L", "5-qubit code logical |0>", zero_logical(), logical_group(false), 2};
  }
  if (key == "one_l") {
    return {"one_L", "5-qubit code logical |1> = XXXXX|0_L>", one_logical(), logical_group(true), 2};
  }
  if (key == "m6_phi_plus") {
    return {"m6_phi_plus", "(|0>|0_L>+|1>|1_L>)/sqrt2", logical_bell(false, +1), m6_group(+1, +1), 3};
  }
  if (key == "m6_phi_minus") {
    return {"m6_phi_minus", "(|0>|0_L>-|1>|1_L>)/sqrt2", logical_bell(false, -1), m6_group(+1, -1), 3};
  }
  if (key == "m6_psi_plus") {
    return {"m6_psi_plus", "(|0>|1_L>+|1>|0_L>)/sqrt2", logical_bell(true, +1), m6_group(-1, +1), 3};
  }
  if (key == "m6_psi_minus") {
    return {"m6_psi_minus", "(|0>|1_L>-|1>|0_L>)/sqrt2", logical_bell(true, -1), m6_group(-1, -1), 3};
  }
  throw ValidationError("unknown fixture '" + std::string(name) + "'");
}

std::vector<Fixture> fixture_states() {
  std::vector<Fixture> out;
  for (const auto& name : fixture_names()) out.push_back(fixture(name));
  return out;
}

}  // namespace kmm
