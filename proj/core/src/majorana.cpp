#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "combinatorics.hpp"
#include "kmm/errors.hpp"
#include "kmm/symmetric.hpp"

namespace kmm {
namespace {

using detail::binom;

// c_k = (-1)^k C(n,k)^{1/2}, so that a symmetrized product of x|0> + y|1>
// factors gives P(z) proportional to prod (1 - z y_i / x_i).
std::vector<double> root_weights(int n) {
  std::vector<double> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = (k % 2 ? -1.0 : 1.0) * std::sqrt(binom(n, k));
  return c;
}

bool same_root(Amplitude a, Amplitude b) {
  return std::abs(a - b) <= 1e-12 * (1.0 + std::max(std::abs(a), std::abs(b)));
}

Amplitude horner(std::span<const Amplitude> coeffs, Amplitude z) {
  Amplitude acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

void MajoranaSpec::validate() const {
  if (n < 1 || n > kMaxSymmetricQubits) throw ValidationError("Majorana roots: n out of range");
  if (roots_at_infinity < 0) throw ValidationError("Majorana roots: negative roots at infinity");
  if (static_cast<int>(finite_roots.size()) + roots_at_infinity != n) {
    throw DimensionError("Majorana roots: " + std::to_string(finite_roots.size()) + " finite + " +
                         std::to_string(roots_at_infinity) + " infinite roots != n = " +
                         std::to_string(n));
  }
  for (const auto& z : finite_roots) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ValidationError("Majorana roots: non-finite root");
    }
  }
}

Amplitude majorana_polynomial(const SymmetricState& s, Amplitude z) {
  const auto c = root_weights(s.num_qubits());
  std::vector<Amplitude> coeffs(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) coeffs[k] = c[k] * s.dicke()[k];
  return horner(coeffs, z);
}

SymmetricState dicke_from_majorana(const MajoranaSpec& m) {
  m.validate();
  const int n = m.n;
  const auto c = root_weights(n);

  std::vector<std::pair<Amplitude, int>> groups;
  for (const auto& z : m.finite_roots) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return same_root(g.first, z); });
    if (it == groups.end()) {
      groups.emplace_back(z, 1);
    } else {
      ++it->second;
    }
  }

  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n + 1);
  int row = 0;
  for (const auto& [z, mult] : groups) {
    for (int j = 0; j < mult; ++j, ++row) {
      // j-th derivative of P at z
      for (int k = j; k <= n; ++k) {
        double falling = 1.0;
        for (int t = 0; t < j; ++t) falling *= (k - t);
        a(row, k) = c[static_cast<std::size_t>(k)] * falling * std::pow(z, k - j);
      }
    }
  }
  for (int j = 0; j < m.roots_at_infinity; ++j, ++row) a(row, n - j) = 1.0;

  for (int r = 0; r < n; ++r) {
    const double scale = a.row(r).cwiseAbs().maxCoeff();
    if (!(scale > 0.0) || !std::isfinite(scale)) throw DegeneracyError("Majorana system row is degenerate");
    a.row(r) /= scale;
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv(n - 1) <= 1e-13 * sv(0)) {
    throw DegeneracyError("Majorana system has a null space of dimension > 1 (s_min/s_max = " +
                          std::to_string(sv(n - 1) / sv(0)) + ")");
  }
  Eigen::VectorXcd d = svd.matrixV().col(n);
  Eigen::Index big = 0;
  d.cwiseAbs().maxCoeff(&big);
  d *= std::polar(1.0, -std::arg(d(big)));
  d(big) = Amplitude{d(big).real(), 0.0};
  return SymmetricState::normalized(n, std::vector<Amplitude>(d.data(), d.data() + d.size()));
}

MajoranaSpec majorana_from_dicke(const SymmetricState& s) {
  const int n = s.num_qubits();
  const auto c = root_weights(n);
  std::vector<Amplitude> coeffs(c.size());
  double biggest = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    coeffs[k] = c[k] * s.dicke()[k];
    biggest = std::max(biggest, std::abs(coeffs[k]));
  }
  // Coefficients this far below the largest are rounding noise.
  const double cutoff = 1e-13 * biggest;
  int high = n;
  while (high > 0 && std::abs(coeffs[static_cast<std::size_t>(high)]) <= cutoff) --high;
  int low = 0;
  while (low < high && std::abs(coeffs[static_cast<std::size_t>(low)]) <= cutoff) ++low;

  MajoranaSpec spec;
  spec.n = n;
  spec.roots_at_infinity = n - high;
  spec.finite_roots.assign(static_cast<std::size_t>(low), Amplitude{0.0, 0.0});

  const int deg = high - low;
  if (deg > 0) {
    const std::span<const Amplitude> reduced(coeffs.data() + low, static_cast<std::size_t>(deg) + 1);
    const Amplitude lead = reduced[static_cast<std::size_t>(deg)];
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -reduced[static_cast<std::size_t>(i)] / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(companion, false);
    if (eig.info() != Eigen::Success) throw DegeneracyError("root finding did not converge");

    std::vector<Amplitude> deriv(static_cast<std::size_t>(deg));
    for (int k = 1; k <= deg; ++k) deriv[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) * reduced[static_cast<std::size_t>(k)];
    for (int i = 0; i < deg; ++i) {
      Amplitude z = eig.eigenvalues()(i);
      // Newton is only trusted well inside the gap to the other eigenvalues;
      // inside a cluster it scatters the roots.
      double gap = std::numeric_limits<double>::infinity();
      for (int j = 0; j < deg; ++j) {
        if (j != i) gap = std::min(gap, std::abs(eig.eigenvalues()(j) - z));
      }
      const int steps = gap > 1e-6 * (1.0 + std::abs(z)) ? 3 : 0;
      for (int step = 0; step < steps; ++step) {
        const Amplitude p = horner(reduced, z);
        const Amplitude dp = horner(deriv, z);
        if (std::abs(dp) <= 1e-300) break;
        const Amplitude next = z - p / dp;
        if (!(std::abs(next - z) < 0.1 * gap)) break;
        if (!(std::abs(horner(reduced, next)) < std::abs(p))) break;
        z = next;
      }
      spec.finite_roots.push_back(z);
    }
  }
  std::sort(spec.finite_roots.begin(), spec.finite_roots.end(), [](Amplitude a, Amplitude b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return spec;
}

std::vector<Point3> majorana_points(const MajoranaSpec& m) {
  m.validate();
  std::vector<Point3> out;
  out.reserve(static_cast<std::size_t>(m.n));
  for (const auto& z : m.finite_roots) {
    const double r2 = std::norm(z);
    out.push_back({2.0 * z.real() / (1.0 + r2), -2.0 * z.imag() / (1.0 + r2), (r2 - 1.0) / (r2 + 1.0)});
  }
  for (int i = 0; i < m.roots_at_infinity; ++i) out.push_back({0.0, 0.0, 1.0});
  return out;
}

MajoranaSpec majorana_from_points(std::span<const Point3> points) {
  MajoranaSpec spec;
  spec.n = static_cast<int>(points.size());
  for (const auto& p : points) {
    const double norm = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    if (!(norm > 1e-12) || !std::isfinite(norm)) throw ValidationError("Majorana point has zero length");
    const double x = p[0] / norm, y = p[1] / norm, w = p[2] / norm;
    if (w >= 1.0 - 1e-12) {
      ++spec.roots_at_infinity;
    } else {
      spec.finite_roots.emplace_back(x / (1.0 - w), -y / (1.0 - w));
    }
  }
  spec.validate();
  return spec;
}

SymmetricState state_from_points(std::span<const Point3> points) {
  return dicke_from_majorana(majorana_from_points(points));
}

}  // namespace kmm
