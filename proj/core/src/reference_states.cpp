#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "kmm/errors.hpp"
#include "kmm/symmetric.hpp"

namespace kmm {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

SymmetricState two_term(int n, int ka, double a, int kb, double b) {
  const std::pair<int, Amplitude> terms[] = {{ka, a}, {kb, b}};
  return SymmetricState::from_terms(n, terms);
}

}  // namespace

std::vector<ReferenceRow> reference_rows() {
  return {
      {"psi4", 4, 18, 25, "(1/sqrt3)|S0> + sqrt(2/3)|S3>"},
      {"psi5", 5, 36, 46, "0.547|S0> + 0.837|S4>"},
      {"psi6", 6, 64, 64, "(|S1> + |S5>)/sqrt2"},
      {"psi7", 7, 90, 100, "(|S1> + |S6>)/sqrt2"},
      {"psi8", 8, 94, 130, "0.672|S1> + 0.741|S6>"},
      {"psi9", 9, 164, 185, "(|S2> + |S7>)/sqrt2"},
      {"psi10", 10, 230, 230, "(|S2> + |S8>)/sqrt2"},
      {"psi12", 12, 341, 371, "(|S2> + |S8>)/sqrt2 on 12 qubits (inferred reading)"},
      {"psi20", 20, 1266, 1484, "dodecahedron vertices, coordinates file required"},
  };
}

SymmetricState reference_state(std::string_view name) {
  const std::string key = lower(name);
  const double h = 1.0 / std::numbers::sqrt2;
  if (key == "psi4") return two_term(4, 0, 1.0 / std::sqrt(3.0), 3, std::sqrt(2.0 / 3.0));
  if (key == "psi5") return two_term(5, 0, 0.547, 4, 0.837);
  if (key == "psi6") return two_term(6, 1, h, 5, h);
  if (key == "psi7") return two_term(7, 1, h, 6, h);
  if (key == "psi8") return two_term(8, 1, 0.672, 6, 0.741);
  if (key == "psi9") return two_term(9, 2, h, 7, h);
  if (key == "psi10") return two_term(10, 2, h, 8, h);
  if (key == "psi12") return two_term(12, 2, h, 8, h);
  if (key == "psi20") {
    throw NotAvailableError("psi20 is defined by Majorana coordinates; supply a majorana_xyz file");
  }
  throw ValidationError("unknown reference state '" + std::string(name) + "'");
}

std::vector<std::pair<std::string, SymmetricState>> reference_states() {
  std::vector<std::pair<std::string, SymmetricState>> out;
  for (const auto& row : reference_rows()) {
    if (row.name == "psi20") continue;
    out.emplace_back(row.name, reference_state(row.name));
  }
  return out;
}

std::vector<Point3> platonic_points(std::string_view solid) {
  const std::string key = lower(solid);
  const double phi = std::numbers::phi;
  std::vector<Point3> pts;
  if (key == "tetrahedron") {
    pts = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  } else if (key == "octahedron") {
    pts = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  } else if (key == "cube") {
    for (int s = 0; s < 8; ++s) pts.push_back({s & 4 ? -1.0 : 1.0, s & 2 ? -1.0 : 1.0, s & 1 ? -1.0 : 1.0});
  } else if (key == "icosahedron" || key == "dodecahedron") {
    const bool ico = key == "icosahedron";
    const double a = ico ? 1.0 : 1.0 / phi;
    const double b = phi;
    if (!ico) {
      for (int s = 0; s < 8; ++s) pts.push_back({s & 4 ? -1.0 : 1.0, s & 2 ? -1.0 : 1.0, s & 1 ? -1.0 : 1.0});
    }
    for (int s = 0; s < 4; ++s) {
      const double u = s & 2 ? -a : a;
      const double v = s & 1 ? -b : b;
      pts.push_back({0, u, v});
      pts.push_back({u, v, 0});
      pts.push_back({v, 0, u});
    }
  } else {
    throw ValidationError("unknown solid '" + std::string(solid) +
                          "' (tetrahedron, octahedron, cube, icosahedron, dodecahedron)");
  }
  for (auto& p : pts) {
    const double norm = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    for (auto& c : p) c /= norm;
  }
  return pts;
}

}  // namespace kmm
