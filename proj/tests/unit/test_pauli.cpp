#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "kmm/errors.hpp"
#include "kmm/pauli.hpp"
#include "oracles.hpp"

using namespace kmm;

namespace {

PauliOperator P(std::string_view s) { return PauliOperator::parse(s); }

bool dense_equal(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return a.rows() == b.rows() && (a - b).cwiseAbs().maxCoeff() == 0.0;
}

}  // namespace

TEST(Pauli, SingleQubitProducts) {
  const auto xy = multiply(P("X"), P("Y"));
  EXPECT_EQ(xy.phase_exp(), 1);
  EXPECT_EQ(xy, P("+iZ"));
  EXPECT_EQ(multiply(P("Y"), P("X")), P("-iZ"));
  EXPECT_EQ(multiply(P("Z"), P("X")), P("+iY"));
  EXPECT_EQ(multiply(P("X"), P("Z")), P("-iY"));
}

TEST(Pauli, SquaresAreIdentityUpToSign) {
  for (const char* s : {"XZIZY", "-YY", "+iXZ", "-iZZY"}) {
    const auto sq = multiply(P(s), P(s));
    EXPECT_TRUE(sq.has_identity_masks());
    EXPECT_TRUE(sq.phase_exp() == 0 || sq.phase_exp() == 2);
    if (P(s).is_hermitian()) EXPECT_EQ(sq.phase_exp(), 0) << s;
  }
}

TEST(Pauli, DisjointSupportsCommute) {
  EXPECT_EQ(multiply(P("IZ"), P("ZI")), P("ZZ"));
  EXPECT_FALSE(commutes(P("X"), P("Z")));
  EXPECT_TRUE(commutes(P("XX"), P("ZZ")));
  EXPECT_TRUE(commutes(P("XYZ"), PauliOperator(3)));
}

TEST(Pauli, SizeMismatchIsDimensionError) {
  EXPECT_THROW(multiply(P("X"), P("XX")), DimensionError);
  EXPECT_THROW(commutes(P("X"), P("XX")), DimensionError);
}

TEST(Pauli, ParseRejectsGarbage) {
  EXPECT_THROW(P(""), ValidationError);
  EXPECT_THROW(P("XQ"), ValidationError);
  EXPECT_THROW(P("+j"), ValidationError);
  EXPECT_EQ(P("-iXZIZY").to_string(), "-iXZIZY");
  EXPECT_EQ(P("XZIZY").phase_exp(), 0);
}

TEST(Pauli, WeightParityLambda) {
  const auto a = PauliOperator::from_packed(4, parse_index_string("0113"));
  EXPECT_EQ(weight(a), 3);
  EXPECT_EQ(lambda_of(a), LambdaIndex::make(1, 2, 0, 1));
  EXPECT_EQ(weight(PauliOperator(5)), 0);
  EXPECT_EQ(lambda_of(PauliOperator(5)), LambdaIndex::make(5, 0, 0, 0));
  EXPECT_EQ(weight(P("ZZZZZZ")), 6);
  EXPECT_EQ(lambda_of(PauliOperator::from_packed(4, parse_index_string("1231"))), LambdaIndex::make(0, 2, 1, 1));

  for (const char* even : {"011", "1122"}) {
    EXPECT_EQ(parity(PauliOperator::from_packed(static_cast<int>(std::string_view(even).size()),
                                                parse_index_string(even))),
              Parity::Even)
        << even;
  }
  for (const char* odd : {"122", "0123", "1123", "1", "333"}) {
    EXPECT_EQ(parity(PauliOperator::from_packed(static_cast<int>(std::string_view(odd).size()),
                                                parse_index_string(odd))),
              Parity::Odd)
        << odd;
  }
}

TEST(Pauli, IndexStringRoundTrip) {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = oracle::random_pauli(7, rng);
    EXPECT_EQ(parse_index_string(p.index_string()), p.packed_index());
  }
  EXPECT_EQ(P("XYZI").index_string(), "1230");
}

TEST(Pauli, DenseBasics) {
  const auto id = to_dense(PauliOperator(2));
  EXPECT_TRUE(dense_equal(id, Eigen::MatrixXcd::Identity(4, 4)));
  EXPECT_EQ(id.trace().real(), 4.0);
  Eigen::MatrixXcd z(2, 2);
  z << 1, 0, 0, -1;
  EXPECT_TRUE(dense_equal(to_dense(P("Z")), z));
  Eigen::MatrixXcd y(2, 2);
  y << 0, Amplitude(0, -1), Amplitude(0, 1), 0;
  EXPECT_TRUE(dense_equal(to_dense(P("Y")), y));
  EXPECT_EQ(to_dense(P("XZ")).trace(), Amplitude(0.0));
  EXPECT_THROW(to_dense(PauliOperator(kDenseQubitCap + 1)), ResourceError);
}

TEST(Pauli, QubitOneIsLeftmostKroneckerFactor) {
  // X on qubit 1 flips the most significant bit of the basis index.
  const auto m = to_dense(P("XI"));
  EXPECT_EQ(m(2, 0), Amplitude(1.0));
  EXPECT_EQ(m(1, 0), Amplitude(0.0));
}

TEST(PauliProperty, ProductMatchesDenseProduct) {
  oracle::Rng rng(1);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto a = oracle::random_pauli(n, rng, true);
      const auto b = oracle::random_pauli(n, rng, true);
      EXPECT_TRUE(dense_equal(to_dense(multiply(a, b)), to_dense(a) * to_dense(b)))
          << a.to_string() << " * " << b.to_string();
    }
  }
}

TEST(PauliProperty, CommutesMatchesDenseCommutator) {
  oracle::Rng rng(2);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto a = oracle::random_pauli(n, rng);
      const auto b = oracle::random_pauli(n, rng);
      const Eigen::MatrixXcd comm = to_dense(a) * to_dense(b) - to_dense(b) * to_dense(a);
      EXPECT_EQ(commutes(a, b), comm.cwiseAbs().maxCoeff() == 0.0);
      const int diff = (multiply(a, b).phase_exp() - multiply(b, a).phase_exp() + 4) % 4;
      EXPECT_EQ(diff == 2, !commutes(a, b));
      EXPECT_EQ(diff == 0, commutes(a, b));
    }
  }
}

TEST(PauliProperty, Associative) {
  oracle::Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = oracle::random_pauli(6, rng, true);
    const auto b = oracle::random_pauli(6, rng, true);
    const auto c = oracle::random_pauli(6, rng, true);
    EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
  }
}

TEST(PauliProperty, WeightAndParityArePermutationInvariant) {
  oracle::Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = oracle::random_pauli(8, rng);
    std::vector<int> perm(8);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto b = a.permuted(perm);
    EXPECT_EQ(weight(a), weight(b));
    EXPECT_EQ(parity(a), parity(b));
    EXPECT_EQ(lambda_of(a), lambda_of(b));
  }
}

TEST(PauliProperty, OddWeightIsOddParity) {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = oracle::random_pauli(7, rng);
    if (weight(a) % 2 == 1) EXPECT_EQ(parity(a), Parity::Odd);
  }
}
