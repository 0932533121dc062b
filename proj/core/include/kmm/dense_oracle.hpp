#pragma once

#include <span>

#include <Eigen/Dense>

#include "kmm/bloch.hpp"
#include "kmm/pauli.hpp"

namespace kmm::dense {

// Brute-force reference implementations. Matrices are capped at
// kDenseQubitCap qubits, vectors at 20.

Eigen::MatrixXcd density_matrix(const StateVector& psi);
int qubits_of(const Eigen::MatrixXcd& rho);  // throws unless 2^n x 2^n

// Traces out the 1-based qubits in `trace_out`; remaining qubits keep their
// relative order.
Eigen::MatrixXcd partial_trace(const Eigen::MatrixXcd& rho, std::span<const int> trace_out);
double purity(const Eigen::MatrixXcd& rho);

// Tr(sigma rho) / 2^n for every Pauli index (n <= 6).
BlochVector bloch_from_density(const Eigen::MatrixXcd& rho,
                               double zero_tolerance = kDefaultZeroTolerance);
// rho = sum_alpha r_alpha sigma_alpha.
Eigen::MatrixXcd density_from_bloch(const BlochVector& r);

StateVector dicke_vector(int n, int k);
// <S_k| sigma |S_k'> by dense application, n <= 10.
Eigen::MatrixXcd project_symmetric(const PauliOperator& op);

}  // namespace kmm::dense
