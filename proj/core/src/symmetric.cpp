#include "kmm/symmetric.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "combinatorics.hpp"
#include "kmm/errors.hpp"
#include "kmm/parallel.hpp"

namespace kmm {
namespace {

using detail::binom;

void check_symmetric_qubits(int n) {
  if (n < 1 || n > kMaxSymmetricQubits) {
    throw ValidationError("symmetric states support 1 <= n <= " +
                          std::to_string(kMaxSymmetricQubits));
  }
}

constexpr std::array<Amplitude, 4> kIPow = {Amplitude{1, 0}, Amplitude{0, 1}, Amplitude{-1, 0},
                                            Amplitude{0, -1}};

}  // namespace

SymmetricState::SymmetricState(int n, std::vector<Amplitude> dicke)
    : n_(n), dicke_(std::move(dicke)) {
  check_symmetric_qubits(n_);
  if (dicke_.size() != static_cast<std::size_t>(n_) + 1) {
    throw DimensionError("expected " + std::to_string(n_ + 1) + " Dicke coefficients");
  }
  double norm = 0.0;
  for (const auto& d : dicke_) norm += std::norm(d);
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > kNormTolerance) {
    throw ValidationError("symmetric state is not normalized (sum |d|^2 = " +
                          std::to_string(norm) + ")");
  }
}

SymmetricState SymmetricState::normalized(int n, std::vector<Amplitude> dicke) {
  check_symmetric_qubits(n);
  double norm = 0.0;
  for (const auto& d : dicke) norm += std::norm(d);
  norm = std::sqrt(norm);
  if (!(norm > 0.0) || !std::isfinite(norm)) throw ValidationError("zero or non-finite state");
  for (auto& d : dicke) d /= norm;
  return SymmetricState(n, std::move(dicke));
}

SymmetricState SymmetricState::from_terms(int n,
                                          std::span<const std::pair<int, Amplitude>> terms) {
  check_symmetric_qubits(n);
  std::vector<Amplitude> dicke(static_cast<std::size_t>(n) + 1);
  for (const auto& [k, d] : terms) {
    if (k < 0 || k > n) throw ValidationError("Dicke index out of range");
    dicke[static_cast<std::size_t>(k)] += d;
  }
  return normalized(n, std::move(dicke));
}

StateVector to_state_vector(const SymmetricState& s) {
  const int n = s.num_qubits();
  if (n > 20) throw ResourceError("state-vector expansion capped at 20 qubits");
  std::vector<Amplitude> amps(std::size_t{1} << n);
  for (std::size_t b = 0; b < amps.size(); ++b) {
    const int k = std::popcount(b);
    amps[b] = s.dicke()[static_cast<std::size_t>(k)] / std::sqrt(binom(n, k));
  }
  return StateVector::normalized(n, std::move(amps));
}

double fidelity(const SymmetricState& a, const SymmetricState& b) {
  if (a.num_qubits() != b.num_qubits()) throw DimensionError("symmetric state sizes differ");
  Amplitude overlap = 0.0;
  for (std::size_t k = 0; k < a.dicke().size(); ++k) {
    overlap += std::conj(a.dicke()[k]) * b.dicke()[k];
  }
  return std::norm(overlap);
}

std::vector<LambdaIndex> all_lambdas(int n) {
  if (n < 1) throw ValidationError("all_lambdas: n must be positive");
  std::vector<LambdaIndex> out;
  out.reserve(static_cast<std::size_t>((n + 3) * (n + 2) * (n + 1) / 6));
  for (int l0 = 0; l0 <= n; ++l0) {
    for (int l1 = 0; l0 + l1 <= n; ++l1) {
      for (int l2 = 0; l0 + l1 + l2 <= n; ++l2) {
        out.push_back(LambdaIndex{{l0, l1, l2, n - l0 - l1 - l2}});
      }
    }
  }
  return out;
}

std::uint64_t multinomial(const LambdaIndex& lam) {
  if (lam.n() > kMaxSymmetricQubits + 1) throw ResourceError("multinomial overflow");
  // Product of binomials keeps every intermediate an exact integer.
  std::uint64_t out = 1;
  int placed = 0;
  for (int c : lam.counts) {
    for (int i = 1; i <= c; ++i) {
      out = out * static_cast<std::uint64_t>(placed + i) / static_cast<std::uint64_t>(i);
    }
    placed += c;
  }
  return out;
}

Eigen::MatrixXcd tau_matrix(const LambdaIndex& lam) {
  for (int c : lam.counts) {
    if (c < 0) throw ValidationError("lambda entries must be non-negative");
  }
  const int n = lam.n();
  check_symmetric_qubits(n);
  const auto [l0, l1, l2, l3] = lam.counts;

  Eigen::MatrixXcd tau = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  for (int k0 = 0; k0 <= l0; ++k0) {
    const double c0 = binom(l0, k0);
    for (int k1 = 0; k1 <= l1; ++k1) {
      const double c01 = c0 * binom(l1, k1);
      for (int k2 = 0; k2 <= l2; ++k2) {
        const double c012 = c01 * binom(l2, k2);
        for (int k3 = 0; k3 <= l3; ++k3) {
          const int row = k0 + k1 + k2 + k3;
          const int col = k0 + (l1 - k1) + (l2 - k2) + k3;
          const int phase = ((2 * k3 + 3 * l2 - 2 * k2) % 4 + 4) % 4;
          tau(row, col) += kIPow[phase] * (c012 * binom(l3, k3));
        }
      }
    }
  }
  for (int k = 0; k <= n; ++k) {
    for (int kp = 0; kp <= n; ++kp) {
      if (tau(k, kp) != Amplitude{}) tau(k, kp) /= std::sqrt(binom(n, k) * binom(n, kp));
    }
  }
  return tau;
}

LambdaComponentTable::LambdaComponentTable(int n, std::vector<LambdaComponent> entries)
    : n_(n), entries_(std::move(entries)) {
  check_symmetric_qubits(n_);
  const std::size_t side = static_cast<std::size_t>(n_) + 1;
  lookup_.assign(side * side * side, -1);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& lam = entries_[i].lambda;
    if (lam.n() != n_) throw DimensionError("lambda entry does not sum to n");
    auto& cell = lookup_[slot(lam)];
    if (cell >= 0) throw ValidationError("duplicate lambda entry");
    cell = static_cast<std::int32_t>(i);
  }
}

std::size_t LambdaComponentTable::slot(const LambdaIndex& lam) const {
  const std::size_t side = static_cast<std::size_t>(n_) + 1;
  return (static_cast<std::size_t>(lam[1]) * side + static_cast<std::size_t>(lam[2])) * side +
         static_cast<std::size_t>(lam[3]);
}

const LambdaComponent& LambdaComponentTable::at(const LambdaIndex& lam) const {
  for (int c : lam.counts) {
    if (c < 0) throw ValidationError("lambda entries must be non-negative");
  }
  if (lam.n() != n_) throw DimensionError("lambda does not sum to n");
  const auto pos = lookup_[slot(lam)];
  if (pos < 0) throw ValidationError("lambda " + lam.to_string() + " not in table");
  return entries_[static_cast<std::size_t>(pos)];
}

double LambdaComponentTable::max_imaginary() const {
  double out = 0.0;
  for (const auto& e : entries_) out = std::max(out, std::abs(e.value.imag()));
  return out;
}

LambdaComponentTable lambda_components(const SymmetricState& s) {
  const int n = s.num_qubits();
  const auto lambdas = all_lambdas(n);
  const Eigen::Map<const Eigen::VectorXcd> d(s.dicke().data(), n + 1);
  const double scale = std::ldexp(1.0, -n);

  std::vector<LambdaComponent> entries(lambdas.size());
  parallel_for(lambdas.size(), [&](std::size_t i) {
    const auto& lam = lambdas[i];
    const Amplitude value = scale * d.dot(tau_matrix(lam) * d);  // dot conjugates d
    entries[i] = LambdaComponent{lam, value, multinomial(lam), lam.parity(), lam.weight()};
  });
  // The identity component is exactly 2^-n for a normalized state.
  entries.back().value = scale;  // last lexicographic entry is [n,0,0,0]
  return LambdaComponentTable(n, std::move(entries));
}

OddCensus odd_census(const LambdaComponentTable& table, double tol) {
  if (!(tol >= 0.0)) throw ValidationError("census tolerance must be non-negative");
  OddCensus c;
  c.n = table.num_qubits();
  c.threshold = tol;
  for (const auto& e : table.entries()) {
    if (e.parity != Parity::Odd) continue;
    ++c.total_odd;
    if (std::abs(e.value) <= tol) ++c.zero_odd;
  }
  c.ratio = c.total_odd ? static_cast<double>(c.zero_odd) / static_cast<double>(c.total_odd) : 0.0;
  return c;
}

OddCensus odd_census(const SymmetricState& s, double tol) {
  return odd_census(lambda_components(s), tol);
}

LambdaCount count_lambda(int n) {
  if (n < 1) throw ValidationError("count_lambda: n must be positive");
  auto c3 = [](std::uint64_t m) { return m * (m - 1) * (m - 2) / 6; };
  LambdaCount out;
  out.total = c3(static_cast<std::uint64_t>(n) + 3);
  // lambda_1..3 = 2a, 2b, 2c with a + b + c <= floor(n/2)
  out.even = c3(static_cast<std::uint64_t>(n / 2) + 3);
  out.odd = out.total - out.even;
  return out;
}

ConstraintReport check_symmetry_constraints(const LambdaComponentTable& table, int t_max) {
  const int n = table.num_qubits();
  if (t_max < 1 || t_max > n / 2) throw ValidationError("t_max must be in [1, floor(n/2)]");
  const double target = std::ldexp(1.0, -n);
  ConstraintReport report;

  // Sum over (a_1..a_t) in {1,2,3}^t grouped by digit counts (c1,c2,c3).
  auto grouped_sum = [&](int t, int base, int extra) {
    double sum = 0.0;
    for (int c1 = 0; c1 <= t; ++c1) {
      for (int c2 = 0; c1 + c2 <= t; ++c2) {
        const int c3 = t - c1 - c2;
        const double weight = static_cast<double>(multinomial(LambdaIndex{{0, c1, c2, c3}}));
        const LambdaIndex lam{{base, 2 * c1 + extra, 2 * c2 + extra, 2 * c3 + extra}};
        sum += weight * table.value(lam);
      }
    }
    return sum;
  };

  for (int t = 1; t <= t_max; ++t) {
    const double residual = std::abs(grouped_sum(t, n - 2 * t, 0) - target);
    report.even_residuals.push_back(residual);
    report.max_even_residual = std::max(report.max_even_residual, residual);
  }

  // Each permutation (b1,b2,b3) of (1,2,3) adds one each of 1,2,3 to the
  // index, so every term of the epsilon sum shares one lambda; even and odd
  // permutations are interleaved as in the literal sum.
  for (int t = 0; t < t_max && 2 * t + 3 <= n; ++t) {
    const double component = grouped_sum(t, n - 2 * t - 3, 1);
    static constexpr std::array<int, 6> kEpsilon = {+1, -1, +1, -1, +1, -1};
    double sum = 0.0;
    for (int sign : kEpsilon) sum += sign * component;
    report.cycle_residuals.push_back(std::abs(sum));
    report.max_cycle_residual = std::max(report.max_cycle_residual, std::abs(sum));
  }
  return report;
}

ConstraintReport check_symmetry_constraints(const SymmetricState& s, int t_max) {
  return check_symmetry_constraints(lambda_components(s), t_max);
}

TwoBodyWitness two_body_witness(const LambdaComponentTable& table) {
  const int n = table.num_qubits();
  if (n < 2) throw ValidationError("two_body_witness needs n >= 2");
  TwoBodyWitness out;
  out.is_2mm = false;
  bool first = true;
  for (int a = 1; a <= 3; ++a) {
    LambdaIndex lam{{n - 2, 0, 0, 0}};
    lam.counts[static_cast<std::size_t>(a)] = 2;
    const double v = table.value(lam);
    if (first || std::abs(v) > std::abs(out.value)) {
      out.witness_lambda = lam;
      out.value = v;
      first = false;
    }
  }
  return out;
}

TwoBodyWitness two_body_witness(const SymmetricState& s) {
  return two_body_witness(lambda_components(s));
}

Eigen::MatrixXcd rotation_operator(int n, double a, double b, double c) {
  check_symmetric_qubits(n);
  const int dim = n + 1;
  const double j = 0.5 * n;
  // Dicke index k has J_z eigenvalue m = j - k; J_+ |S_k> = sqrt(k (n-k+1)) |S_{k-1}>.
  Eigen::MatrixXcd jplus = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 1; k <= n; ++k) jplus(k - 1, k) = std::sqrt(static_cast<double>(k) * (n - k + 1));
  const Eigen::MatrixXcd jy = (jplus - jplus.adjoint()) / Amplitude{0.0, 2.0};

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(jy);
  Eigen::VectorXcd phases(dim);
  for (int i = 0; i < dim; ++i) phases(i) = std::polar(1.0, -b * eig.eigenvalues()(i));
  const Eigen::MatrixXcd ry = eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();

  Eigen::VectorXcd za(dim), zc(dim);
  for (int k = 0; k <= n; ++k) {
    const double m = j - k;
    za(k) = std::polar(1.0, -a * m);
    zc(k) = std::polar(1.0, -c * m);
  }
  return za.asDiagonal() * ry * zc.asDiagonal();
}

SymmetricState rotate(const SymmetricState& s, double a, double b, double c) {
  const int n = s.num_qubits();
  const Eigen::Map<const Eigen::VectorXcd> d(s.dicke().data(), n + 1);
  const Eigen::VectorXcd out = rotation_operator(n, a, b, c) * d;
  return SymmetricState::normalized(n, std::vector<Amplitude>(out.data(), out.data() + out.size()));
}

}  // namespace kmm
