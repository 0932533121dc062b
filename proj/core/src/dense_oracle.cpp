#include "kmm/dense_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "combinatorics.hpp"
#include "kmm/errors.hpp"

namespace kmm::dense {
namespace {

constexpr int kBlochOracleCap = 6;
constexpr int kVectorCap = 20;
constexpr int kProjectionCap = 10;

void check_cap(int n, int cap, const char* what) {
  if (n > cap) {
    throw ResourceError(std::string(what) + " is capped at " + std::to_string(cap) + " qubits");
  }
}

}  // namespace

Eigen::MatrixXcd density_matrix(const StateVector& psi) {
  check_cap(psi.num_qubits(), kDenseQubitCap, "dense density matrix");
  const auto amps = psi.amplitudes();
  const Eigen::Map<const Eigen::VectorXcd> v(amps.data(), static_cast<Eigen::Index>(amps.size()));
  return v * v.adjoint();
}

int qubits_of(const Eigen::MatrixXcd& rho) {
  const auto dim = static_cast<std::size_t>(rho.rows());
  if (rho.rows() != rho.cols() || dim == 0 || !std::has_single_bit(dim)) {
    throw DimensionError("operator is not 2^n x 2^n");
  }
  const int n = std::countr_zero(dim);
  check_cap(n, kDenseQubitCap, "dense operator");
  return n;
}

Eigen::MatrixXcd partial_trace(const Eigen::MatrixXcd& rho, std::span<const int> trace_out) {
  const int n = qubits_of(rho);
  std::size_t traced_mask = 0;
  for (int q : trace_out) {
    if (q < 1 || q > n) throw ValidationError("qubit " + std::to_string(q) + " out of range");
    const std::size_t bit = std::size_t{1} << (n - q);
    if (traced_mask & bit) throw ValidationError("duplicate qubit in trace-out set");
    traced_mask |= bit;
  }
  const std::size_t dim = std::size_t{1} << n;
  const int kept = n - std::popcount(traced_mask);

  // Compress the kept bits of a full index, preserving their order.
  auto kept_index = [&](std::size_t full) {
    std::size_t out = 0;
    for (int b = n - 1; b >= 0; --b) {
      const std::size_t bit = std::size_t{1} << b;
      if (traced_mask & bit) continue;
      out = (out << 1) | ((full & bit) ? 1 : 0);
    }
    return out;
  };

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(Eigen::Index{1} << kept, Eigen::Index{1} << kept);
  for (std::size_t a = 0; a < dim; ++a) {
    const auto ka = static_cast<Eigen::Index>(kept_index(a));
    for (std::size_t b = 0; b < dim; ++b) {
      if ((a & traced_mask) != (b & traced_mask)) continue;
      out(ka, static_cast<Eigen::Index>(kept_index(b))) +=
          rho(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
    }
  }
  return out;
}

double purity(const Eigen::MatrixXcd& rho) {
  qubits_of(rho);
  return (rho * rho).trace().real();
}

BlochVector bloch_from_density(const Eigen::MatrixXcd& rho, double zero_tolerance) {
  const int n = qubits_of(rho);
  check_cap(n, kBlochOracleCap, "dense Bloch expansion");
  const PackedIndex count = PackedIndex{1} << (2 * n);
  const double scale = std::ldexp(1.0, -n);
  const Eigen::MatrixXcd rho_t = rho.transpose();
  std::vector<BlochVector::Entry> entries;
  for (PackedIndex idx = 0; idx < count; ++idx) {
    const double value = scale * to_dense(PauliOperator::from_packed(n, idx)).cwiseProduct(rho_t).sum().real();
    if (idx == 0 || std::abs(value) > zero_tolerance) entries.emplace_back(idx, value);
  }
  return BlochVector(n, std::move(entries), zero_tolerance);
}

Eigen::MatrixXcd density_from_bloch(const BlochVector& r) {
  const int n = r.num_qubits();
  check_cap(n, kBlochOracleCap, "dense Bloch resummation");
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [idx, value] : r.components()) {
    rho += value * to_dense(PauliOperator::from_packed(n, idx));
  }
  return rho;
}

StateVector dicke_vector(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw ValidationError("dicke_vector needs 0 <= k <= n, n >= 1");
  check_cap(n, kVectorCap, "Dicke vector");
  const double amp = 1.0 / std::sqrt(detail::binom(n, k));
  std::vector<Amplitude> amps(std::size_t{1} << n);
  for (std::size_t b = 0; b < amps.size(); ++b) {
    if (std::popcount(b) == k) amps[b] = amp;
  }
  return StateVector::normalized(n, std::move(amps));
}

Eigen::MatrixXcd project_symmetric(const PauliOperator& op) {
  const int n = op.num_qubits();
  check_cap(n, kProjectionCap, "symmetric projection");
  std::vector<StateVector> dicke;
  for (int k = 0; k <= n; ++k) dicke.push_back(dicke_vector(n, k));

  Eigen::MatrixXcd out(n + 1, n + 1);
  for (int kp = 0; kp <= n; ++kp) {
    const StateVector image = apply(op, dicke[static_cast<std::size_t>(kp)]);
    for (int k = 0; k <= n; ++k) {
      Amplitude acc = 0.0;
      const auto bra = dicke[static_cast<std::size_t>(k)].amplitudes();
      const auto ket = image.amplitudes();
      for (std::size_t b = 0; b < bra.size(); ++b) acc += std::conj(bra[b]) * ket[b];
      out(k, kp) = acc;
    }
  }
  return out;
}

}  // namespace kmm::dense
