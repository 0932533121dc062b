#include <gtest/gtest.h>

#include <cmath>

#include "kmm/dense_oracle.hpp"
#include "kmm/errors.hpp"
#include "oracles.hpp"

using namespace kmm;

namespace {

StateVector basis_state(int n, std::size_t index) {
  std::vector<Amplitude> a(std::size_t{1} << n);
  a[index] = 1.0;
  return StateVector(n, a);
}

}  // namespace

TEST(PartialTrace, BellPairGivesMaximallyMixed) {
  const double h = 1.0 / std::sqrt(2.0);
  const StateVector bell(2, {h, 0.0, 0.0, h});
  const auto rho = dense::density_matrix(bell);
  for (int q : {1, 2}) {
    const int out[] = {q};
    const auto reduced = dense::partial_trace(rho, out);
    EXPECT_LT((reduced - 0.5 * Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_NEAR(dense::purity(reduced), 0.5, 1e-15);
  }
  EXPECT_NEAR(dense::purity(rho), 1.0, 1e-15);
}

TEST(PartialTrace, QubitOneIsTheLeftFactor) {
  // |0>_1 |1>_2
  const auto rho = dense::density_matrix(basis_state(2, 0b01));
  const int drop2[] = {2};
  const int drop1[] = {1};
  EXPECT_NEAR(dense::partial_trace(rho, drop2)(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(dense::partial_trace(rho, drop1)(1, 1).real(), 1.0, 1e-15);
}

TEST(PartialTrace, KeptQubitsKeepTheirOrder) {
  // |0>_1 |1>_2 |1>_3 |0>_4, drop 1 and 4 -> |11>
  const auto rho = dense::density_matrix(basis_state(4, 0b0110));
  const int drop[] = {4, 1};
  EXPECT_NEAR(dense::partial_trace(rho, drop)(3, 3).real(), 1.0, 1e-15);
  const int drop23[] = {2, 3};
  EXPECT_NEAR(dense::partial_trace(rho, drop23)(0, 0).real(), 1.0, 1e-15);
}

TEST(PartialTraceProperty, TraceAndPositivity) {
  oracle::Rng rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 5;
    const auto rho = dense::density_matrix(oracle::random_state(n, rng));
    std::vector<int> drop;
    for (int q = 1; q <= n; ++q) {
      if ((trial >> (q % 4)) & 1) drop.push_back(q);
    }
    if (drop.size() == static_cast<std::size_t>(n)) drop.pop_back();
    const auto reduced = dense::partial_trace(rho, drop);
    EXPECT_NEAR(reduced.trace().real(), 1.0, 1e-12);
    EXPECT_LT((reduced - reduced.adjoint()).cwiseAbs().maxCoeff(), 1e-14);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(reduced);
    EXPECT_GT(eig.eigenvalues().minCoeff(), -1e-12);
    EXPECT_LE(dense::purity(reduced), 1.0 + 1e-12);
  }
}

TEST(PartialTrace, Errors) {
  const auto rho = dense::density_matrix(basis_state(2, 0));
  const int bad[] = {3};
  const int dup[] = {1, 1};
  EXPECT_THROW(dense::partial_trace(rho, bad), ValidationError);
  EXPECT_THROW(dense::partial_trace(rho, dup), ValidationError);
  EXPECT_THROW(dense::qubits_of(Eigen::MatrixXcd::Identity(3, 3)), DimensionError);
  EXPECT_THROW(dense::qubits_of(Eigen::MatrixXcd::Zero(2, 4)), DimensionError);
}

TEST(BlochOracle, RoundTripThroughDensity) {
  oracle::Rng rng(52);
  for (int n = 1; n <= 4; ++n) {
    const auto psi = oracle::random_state(n, rng);
    const auto rho = dense::density_matrix(psi);
    const auto r = dense::bloch_from_density(rho, 0.0);
    EXPECT_LT((dense::density_from_bloch(r) - rho).cwiseAbs().maxCoeff(), 1e-13);
    const auto fast = bloch_from_state(psi, 0.0);
    for (const auto& [idx, value] : r.components()) EXPECT_NEAR(fast.component(idx), value, 1e-13);
  }
}

TEST(Dicke, Orthonormal) {
  for (int n = 1; n <= 10; ++n) {
    std::vector<StateVector> d;
    for (int k = 0; k <= n; ++k) d.push_back(dense::dicke_vector(n, k));
    for (int k = 0; k <= n; ++k) {
      const auto a = d[static_cast<std::size_t>(k)].amplitudes();
      for (int kp = 0; kp <= n; ++kp) {
        const auto b = d[static_cast<std::size_t>(kp)].amplitudes();
        Amplitude ip{};
        for (std::size_t i = 0; i < a.size(); ++i) ip += std::conj(a[i]) * b[i];
        EXPECT_NEAR(std::abs(ip), k == kp ? 1.0 : 0.0, 1e-14);
      }
    }
  }
}

TEST(Dicke, TwoQubitSingleExcitation) {
  const auto d = dense::dicke_vector(2, 1);
  const auto v = d.amplitudes();
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(v[0].real(), 0.0, 1e-15);
  EXPECT_NEAR(v[1].real(), h, 1e-15);
  EXPECT_NEAR(v[2].real(), h, 1e-15);
  EXPECT_NEAR(v[3].real(), 0.0, 1e-15);
}

TEST(Projection, IdentityAndCaps) {
  const int digits[] = {0, 0, 0};
  EXPECT_LT((dense::project_symmetric(PauliOperator::from_digits(digits)) - Eigen::MatrixXcd::Identity(4, 4))
                .cwiseAbs()
                .maxCoeff(),
            1e-15);
  EXPECT_THROW(dense::project_symmetric(PauliOperator::from_digits(std::vector<int>(11, 1))), ResourceError);
  EXPECT_THROW(dense::dicke_vector(21, 1), ResourceError);
  EXPECT_THROW(dense::dicke_vector(3, 4), ValidationError);
  EXPECT_THROW(dense::bloch_from_density(Eigen::MatrixXcd::Identity(128, 128)), ResourceError);
}
