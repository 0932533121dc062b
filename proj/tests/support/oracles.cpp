#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "kmm/dense_oracle.hpp"

namespace kmm::oracle {

StateVector random_state(int n, Rng& rng) {
  std::normal_distribution<double> g;
  std::vector<Amplitude> amps(std::size_t{1} << n);
  for (auto& a : amps) a = {g(rng), g(rng)};
  return StateVector::normalized(n, std::move(amps));
}

SymmetricState random_symmetric(int n, Rng& rng) {
  std::normal_distribution<double> g;
  std::vector<Amplitude> d(static_cast<std::size_t>(n) + 1);
  for (auto& a : d) a = {g(rng), g(rng)};
  return SymmetricState::normalized(n, std::move(d));
}

PauliOperator random_pauli(int n, Rng& rng, bool random_phase) {
  std::uniform_int_distribution<int> digit(0, 3);
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (auto& d : digits) d = digit(rng);
  return PauliOperator::from_digits(digits, random_phase ? digit(rng) : 0);
}

BigInt enumerate_low_weight(int n, int k) {
  BigInt count = 0;
  const PackedIndex total = PackedIndex{1} << (2 * n);
  for (PackedIndex idx = 1; idx < total; ++idx) {
    int w = 0;
    for (int q = 0; q < n; ++q) w += ((idx >> (2 * q)) & 3u) != 0;
    if (w <= k) ++count;
  }
  return count;
}

std::vector<Amplitude> poly_from_roots(const std::vector<Amplitude>& roots) {
  std::vector<Amplitude> c{1.0};
  for (const auto& r : roots) {
    std::vector<Amplitude> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

double dense_component(const StateVector& psi, const PauliOperator& p) {
  const auto amps = psi.amplitudes();
  const Eigen::Map<const Eigen::VectorXcd> v(amps.data(), static_cast<Eigen::Index>(amps.size()));
  return v.dot(to_dense(p) * v).real() / static_cast<double>(amps.size());
}

BlochVector expand_lambda_table(const LambdaComponentTable& table, double zero_tolerance) {
  const int n = table.num_qubits();
  std::vector<BlochVector::Entry> entries;
  const PackedIndex total = PackedIndex{1} << (2 * n);
  for (PackedIndex idx = 0; idx < total; ++idx) {
    const double v = table.value(packed_lambda(n, idx));
    if (idx == 0 || std::abs(v) > zero_tolerance) entries.emplace_back(idx, v);
  }
  return BlochVector(n, std::move(entries), zero_tolerance);
}

Eigen::MatrixXcd brute_projection(const LambdaIndex& lam, Rng& rng) {
  const int n = lam.n();
  std::vector<int> digits;
  for (int a = 0; a < 4; ++a) digits.insert(digits.end(), static_cast<std::size_t>(lam[static_cast<std::size_t>(a)]), a);
  std::shuffle(digits.begin(), digits.end(), rng);
  const PauliOperator p = PauliOperator::from_digits(digits);

  // <j| sigma |j'> summed over weight classes, normalized afterwards.
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  Eigen::VectorXi counts = Eigen::VectorXi::Zero(n + 1);
  for (std::size_t j = 0; j < dim; ++j) counts(std::popcount(j)) += 1;
  const Eigen::MatrixXcd sigma = to_dense(p);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t jp = 0; jp < dim; ++jp) {
      const Amplitude v = sigma(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(jp));
      if (v != Amplitude{}) acc(std::popcount(j), std::popcount(jp)) += v;
    }
  }
  for (int k = 0; k <= n; ++k) {
    for (int kp = 0; kp <= n; ++kp) acc(k, kp) /= std::sqrt(static_cast<double>(counts(k)) * counts(kp));
  }
  return acc;
}

double root_multiset_distance(std::vector<Amplitude> a, std::vector<Amplitude> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const auto& z : a) {
    auto best = std::min_element(b.begin(), b.end(), [&](Amplitude x, Amplitude y) {
      return std::abs(x - z) < std::abs(y - z);
    });
    worst = std::max(worst, std::abs(*best - z) / (1.0 + std::abs(z)));
    b.erase(best);
  }
  return worst;
}

}  // namespace kmm::oracle
