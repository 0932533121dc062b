#include "kmm/bloch.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

#include "kmm/errors.hpp"
#include "kmm/parallel.hpp"

namespace kmm {
namespace {

double norm_squared(std::span<const Amplitude> amps) {
  double s = 0.0;
  for (const auto& a : amps) s += std::norm(a);
  return s;
}

void check_state_size(int n, std::size_t size) {
  if (n < 1 || n > 30) throw ValidationError("state qubit count must be in [1, 30]");
  if (size != (std::size_t{1} << n)) {
    throw DimensionError("expected " + std::to_string(std::size_t{1} << n) +
                         " amplitudes for n=" + std::to_string(n) + ", got " +
                         std::to_string(size));
  }
}

// Reverses the low n bits: converts between Pauli masks (bit q-1 = qubit q)
// and basis-index masks (bit n-q = qubit q).
std::uint64_t reverse_bits(std::uint64_t v, int n) {
  std::uint64_t out = 0;
  for (int i = 0; i < n; ++i) out |= ((v >> i) & 1u) << (n - 1 - i);
  return out;
}

constexpr std::array<Amplitude, 4> kIPow = {Amplitude{1, 0}, Amplitude{0, 1}, Amplitude{-1, 0},
                                            Amplitude{0, -1}};

// Re(i^p) for the symmetrized structure constants.
int real_ipow(int p) { return p == 0 ? 1 : (p == 2 ? -1 : 0); }

std::vector<int> normalized_subset(int n, std::span<const int> keep) {
  if (keep.empty()) throw ValidationError("qubit subset must be nonempty");
  std::vector<int> out(keep.begin(), keep.end());
  std::sort(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 1 || out[i] > n) {
      throw ValidationError("qubit " + std::to_string(out[i]) + " outside 1.." +
                            std::to_string(n));
    }
    if (i > 0 && out[i] == out[i - 1]) throw ValidationError("duplicate qubit in subset");
  }
  return out;
}

}  // namespace

StateVector::StateVector(int n, std::vector<Amplitude> amplitudes)
    : n_(n), amps_(std::move(amplitudes)) {
  check_state_size(n_, amps_.size());
  const double norm = norm_squared(amps_);
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > kNormTolerance) {
    throw ValidationError("state is not normalized (sum |a|^2 = " + std::to_string(norm) + ")");
  }
}

StateVector StateVector::normalized(int n, std::vector<Amplitude> amplitudes) {
  check_state_size(n, amplitudes.size());
  const double norm = std::sqrt(norm_squared(amplitudes));
  if (!(norm > 0.0) || !std::isfinite(norm)) throw ValidationError("zero or non-finite state");
  for (auto& a : amplitudes) a /= norm;
  return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::basis(int n, std::size_t index) {
  check_state_size(n, std::size_t{1} << std::clamp(n, 1, 30));
  if (index >= (std::size_t{1} << n)) throw ValidationError("basis index out of range");
  std::vector<Amplitude> amps(std::size_t{1} << n);
  amps[index] = 1.0;
  return StateVector(n, std::move(amps));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  const int n = a.num_qubits() + b.num_qubits();
  std::vector<Amplitude> out(std::size_t{1} << n);
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    for (std::size_t j = 0; j < b.dimension(); ++j) {
      out[i * b.dimension() + j] = a.amplitudes()[i] * b.amplitudes()[j];
    }
  }
  return StateVector::normalized(n, std::move(out));
}

StateVector apply(const PauliOperator& p, const StateVector& psi) {
  const int n = psi.num_qubits();
  if (p.num_qubits() != n) throw DimensionError("Pauli and state sizes differ");
  const std::uint64_t x = reverse_bits(p.x_mask(), n);
  const std::uint64_t z = reverse_bits(p.z_mask(), n);
  const Amplitude phase = kIPow[(p.phase_exp() + std::popcount(x & z)) % 4];
  std::vector<Amplitude> out(psi.dimension());
  for (std::size_t b = 0; b < psi.dimension(); ++b) {
    const double sign = (std::popcount(z & b) % 2) ? -1.0 : 1.0;
    out[b ^ x] = phase * sign * psi.amplitudes()[b];
  }
  return StateVector(n, std::move(out));
}

Amplitude expectation(const StateVector& psi, const PauliOperator& p) {
  const int n = psi.num_qubits();
  if (p.num_qubits() != n) throw DimensionError("Pauli and state sizes differ");
  const std::uint64_t x = reverse_bits(p.x_mask(), n);
  const std::uint64_t z = reverse_bits(p.z_mask(), n);
  const auto amps = psi.amplitudes();
  Amplitude acc = 0.0;
  for (std::size_t b = 0; b < amps.size(); ++b) {
    const Amplitude term = std::conj(amps[b ^ x]) * amps[b];
    acc += (std::popcount(z & b) % 2) ? -term : term;
  }
  return kIPow[(p.phase_exp() + std::popcount(x & z)) % 4] * acc;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) throw DimensionError("state sizes differ");
  Amplitude overlap = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    overlap += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
  }
  return std::norm(overlap);
}

BlochVector::BlochVector(int n, std::vector<Entry> components, double zero_tolerance)
    : n_(n), zero_tolerance_(zero_tolerance), components_(std::move(components)) {
  if (n < 1 || n > kMaxPauliQubits) throw ValidationError("Bloch vector qubit count out of range");
  if (!(zero_tolerance >= 0.0)) throw ValidationError("zero tolerance must be non-negative");
  std::sort(components_.begin(), components_.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i > 0 && components_[i].first == components_[i - 1].first) {
      throw ValidationError("duplicate Bloch component index");
    }
    if (n < 32 && (components_[i].first >> (2 * n)) != 0) {
      throw ValidationError("Bloch component index exceeds qubit count");
    }
    if (!std::isfinite(components_[i].second)) {
      throw ValidationError("non-finite Bloch component");
    }
  }
  const double id = std::ldexp(1.0, -n);
  if (!components_.empty() && components_.front().first == 0) {
    if (std::abs(components_.front().second - id) > 1e-12) {
      throw ValidationError("identity component must equal 2^-n");
    }
    components_.front().second = id;
  } else {
    components_.insert(components_.begin(), Entry{0, id});
  }
}

double BlochVector::component(PackedIndex index) const {
  const auto it = std::lower_bound(
      components_.begin(), components_.end(), index,
      [](const Entry& e, PackedIndex key) { return e.first < key; });
  return (it != components_.end() && it->first == index) ? it->second : 0.0;
}

double BlochVector::identity_component() const { return components_.front().second; }

BlochVector bloch_from_state(const StateVector& psi, double zero_tolerance) {
  const int n = psi.num_qubits();
  if (n > kDenseQubitCap) {
    throw ResourceError("full Bloch expansion capped at " + std::to_string(kDenseQubitCap) +
                        " qubits");
  }
  const std::size_t dim = psi.dimension();
  const auto amps = psi.amplitudes();
  const double scale = std::ldexp(1.0, -n);

  // For basis-order X pattern x, f(b) = conj(psi[b^x]) psi[b]; its
  // Walsh-Hadamard transform at z is <psi| X^x Z^z |psi>.
  std::vector<std::vector<BlochVector::Entry>> per_x(dim);
  parallel_for(dim, [&](std::size_t x) {
    std::vector<Amplitude> f(dim);
    for (std::size_t b = 0; b < dim; ++b) f[b] = std::conj(amps[b ^ x]) * amps[b];
    for (std::size_t h = 1; h < dim; h <<= 1) {
      for (std::size_t i = 0; i < dim; i += 2 * h) {
        for (std::size_t j = i; j < i + h; ++j) {
          const Amplitude u = f[j];
          const Amplitude v = f[j + h];
          f[j] = u + v;
          f[j + h] = u - v;
        }
      }
    }
    const std::uint64_t px = reverse_bits(x, n);
    auto& out = per_x[x];
    for (std::size_t z = 0; z < dim; ++z) {
      const int ys = std::popcount(x & z) % 4;
      const double value = scale * (kIPow[ys] * f[z]).real();
      if (std::abs(value) <= zero_tolerance && !(x == 0 && z == 0)) continue;
      const auto p = PauliOperator::from_masks(n, px, reverse_bits(z, n));
      out.emplace_back(p.packed_index(), value);
    }
  });

  std::vector<BlochVector::Entry> all;
  for (auto& chunk : per_x) all.insert(all.end(), chunk.begin(), chunk.end());
  return BlochVector(n, std::move(all), zero_tolerance);
}

BlochVector reduce(const BlochVector& r, std::span<const int> keep) {
  const int n = r.num_qubits();
  const auto qubits = normalized_subset(n, keep);
  const int k = static_cast<int>(qubits.size());
  PackedIndex keep_mask = 0;
  for (int q : qubits) keep_mask |= PackedIndex{3} << (2 * (q - 1));

  std::vector<BlochVector::Entry> out;
  for (const auto& [index, value] : r.components()) {
    if (index & ~keep_mask) continue;
    PackedIndex reduced = 0;
    for (int j = 0; j < k; ++j) {
      reduced |= static_cast<PackedIndex>(packed_digit(index, qubits[j])) << (2 * j);
    }
    out.emplace_back(reduced, std::ldexp(value, n - k));
  }
  return BlochVector(k, std::move(out), r.zero_tolerance());
}

double linear_entropy(const BlochVector& r, std::span<const int> keep) {
  const int n = r.num_qubits();
  const auto qubits = normalized_subset(n, keep);
  const int k = static_cast<int>(qubits.size());
  PackedIndex keep_mask = 0;
  for (int q : qubits) keep_mask |= PackedIndex{3} << (2 * (q - 1));
  double sum = 0.0;
  for (const auto& [index, value] : r.components()) {
    if ((index & ~keep_mask) == 0) sum += value * value;
  }
  return 1.0 - std::ldexp(sum, 2 * n - k);
}

BigInt subspace_dim(int n, int k) {
  if (n < 1) throw ValidationError("subspace_dim: n must be positive");
  if (k < 0 || k > n) throw ValidationError("subspace_dim: k must be in [0, n]");
  BigInt total = 0;
  BigInt three_pow = 1;
  for (int l = 1; l <= k; ++l) {
    three_pow *= 3;
    total += binomial(n, l) * three_pow;
  }
  return total;
}

KmmReport is_k_mm(const BlochVector& r, int k, double tol, std::size_t max_listed) {
  const int n = r.num_qubits();
  if (k < 0 || k > n) throw ValidationError("k must be in [0, n]");
  if (!(tol >= 0.0)) throw ValidationError("tolerance must be non-negative");
  KmmReport report;
  report.k = k;
  for (const auto& [index, value] : r.components()) {
    const int w = packed_weight(index);
    if (w == 0 || w > k) continue;
    const double mag = std::abs(value);
    report.max_violation = std::max(report.max_violation, mag);
    if (mag > tol) {
      ++report.violation_count;
      if (report.violating_indices.size() < max_listed) report.violating_indices.push_back(index);
    }
  }
  report.verdict = report.violation_count == 0 && k <= n / 2;
  return report;
}

double pure_radius_squared(int n) { return (std::ldexp(1.0, n) - 1.0) * std::ldexp(1.0, -2 * n); }

PurityResiduals purity_residuals(const BlochVector& r) {
  const int n = r.num_qubits();
  PurityResiduals out;

  struct Term {
    std::uint64_t x, z;
    int y;
    double value;
  };
  std::vector<Term> terms;
  double norm = 0.0;
  for (const auto& [index, value] : r.components()) {
    if (index == 0) continue;
    const auto p = PauliOperator::from_packed(n, index);
    terms.push_back({p.x_mask(), p.z_mask(), std::popcount(p.x_mask() & p.z_mask()), value});
    norm += value * value;
  }
  out.norm_residual = std::abs(norm - pure_radius_squared(n));

  // (r*r)_gamma = sum_{j,k} Re(g_{jk}^gamma) r_j r_k over ordered pairs of the
  // support; only commuting pairs survive the symmetrization.
  const double coeff = 1.0 - std::ldexp(2.0, -n);
  auto key_of = [n](std::uint64_t x, std::uint64_t z) { return x | (z << n); };
  double worst = 0.0;
  if (n <= 10) {
    std::vector<double> star(std::size_t{1} << (2 * n), 0.0);
    std::vector<double> own(std::size_t{1} << (2 * n), 0.0);
    for (const auto& t : terms) own[key_of(t.x, t.z)] = t.value;
    for (const auto& a : terms) {
      for (const auto& b : terms) {
        const std::uint64_t x = a.x ^ b.x, z = a.z ^ b.z;
        if ((x | z) == 0) continue;
        const int phase = (a.y + b.y - std::popcount(x & z) + 2 * std::popcount(a.z & b.x)) & 3;
        const int s = real_ipow(phase);
        if (s != 0) star[key_of(x, z)] += s * a.value * b.value;
      }
    }
    for (std::size_t key = 1; key < star.size(); ++key) {
      worst = std::max(worst, std::abs(star[key] - coeff * own[key]));
    }
  } else {
    std::unordered_map<std::uint64_t, double> star, own;
    for (const auto& t : terms) own[key_of(t.x, t.z)] = t.value;
    for (const auto& a : terms) {
      for (const auto& b : terms) {
        const std::uint64_t x = a.x ^ b.x, z = a.z ^ b.z;
        if ((x | z) == 0) continue;
        const int phase = (a.y + b.y - std::popcount(x & z) + 2 * std::popcount(a.z & b.x)) & 3;
        const int s = real_ipow(phase);
        if (s != 0) star[key_of(x, z)] += s * a.value * b.value;
      }
    }
    for (const auto& [key, v] : star) {
      const auto it = own.find(key);
      worst = std::max(worst, std::abs(v - coeff * (it == own.end() ? 0.0 : it->second)));
    }
    for (const auto& [key, v] : own) {
      if (!star.count(key)) worst = std::max(worst, std::abs(coeff * v));
    }
  }
  out.orientation_residual = worst;
  return out;
}

}  // namespace kmm
