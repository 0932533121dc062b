#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "kmm/bigint.hpp"
#include "kmm/pauli.hpp"

namespace kmm {

using Amplitude = std::complex<double>;

inline constexpr double kDefaultZeroTolerance = 1e-10;
inline constexpr double kNormTolerance = 1e-12;

// Pure n-qubit state in the computational basis; qubit 1 is the most
// significant bit of the basis index.
class StateVector {
 public:
  // Throws ValidationError unless sum |a|^2 = 1 within kNormTolerance.
  StateVector(int n, std::vector<Amplitude> amplitudes);
  static StateVector normalized(int n, std::vector<Amplitude> amplitudes);
  static StateVector basis(int n, std::size_t index);

  int num_qubits() const { return n_; }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  std::size_t dimension() const { return amps_.size(); }

 private:
  int n_;
  std::vector<Amplitude> amps_;
};

// |a> (x) |b>, a on the leading qubits.
StateVector tensor(const StateVector& a, const StateVector& b);
// sigma |psi>, evaluated with bit operations.
StateVector apply(const PauliOperator& p, const StateVector& psi);
// <psi| sigma |psi>, O(2^n).
Amplitude expectation(const StateVector& psi, const PauliOperator& p);
double fidelity(const StateVector& a, const StateVector& b);

// Sparse generalized Bloch vector r_alpha = Tr(sigma_alpha rho) / 2^n, stored
// as (packed index, value) pairs sorted by index. Absent entries are zero.
class BlochVector {
 public:
  using Entry = std::pair<PackedIndex, double>;

  // The identity entry is forced to exactly 2^-n; a supplied identity value
  // that differs by more than 1e-12 is rejected.
  BlochVector(int n, std::vector<Entry> components,
              double zero_tolerance = kDefaultZeroTolerance);

  int num_qubits() const { return n_; }
  double zero_tolerance() const { return zero_tolerance_; }
  std::span<const Entry> components() const { return components_; }
  std::size_t support_size() const { return components_.size(); }
  double component(PackedIndex index) const;
  double identity_component() const;

 private:
  int n_;
  double zero_tolerance_;
  std::vector<Entry> components_;
};

// All 4^n expectation values, one Walsh-Hadamard transform per X pattern.
// Entries with |r| <= zero_tolerance are dropped. n <= kDenseQubitCap.
BlochVector bloch_from_state(const StateVector& psi,
                             double zero_tolerance = kDefaultZeroTolerance);

// Reduced Bloch vector on the 1-based qubits in `keep` (sorted ascending;
// output qubit j is the j-th kept qubit).
BlochVector reduce(const BlochVector& r, std::span<const int> keep);
double linear_entropy(const BlochVector& r, std::span<const int> keep);

// D_k = sum_{l=1}^{k} C(n,l) 3^l, the number of indices with 0 < weight <= k.
BigInt subspace_dim(int n, int k);

struct KmmReport {
  int k = 0;
  bool verdict = true;
  double max_violation = 0.0;
  std::size_t violation_count = 0;
  std::vector<PackedIndex> violating_indices;  // first `max_listed` by index
};

// Every component with 0 < weight <= k must satisfy |r| <= tol. For
// k > floor(n/2) the verdict is false regardless of the components.
KmmReport is_k_mm(const BlochVector& r, int k, double tol = kDefaultZeroTolerance,
                  std::size_t max_listed = 16);

struct PurityResiduals {
  double norm_residual = 0.0;
  double orientation_residual = 0.0;
};

// Squared radius of the traceless part for pure states: (2^n - 1) / 4^n.
double pure_radius_squared(int n);
PurityResiduals purity_residuals(const BlochVector& r);

}  // namespace kmm
