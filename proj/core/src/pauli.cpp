#include "kmm/pauli.hpp"

#include <bit>
#include <complex>
#include <sstream>

#include "kmm/errors.hpp"

namespace kmm {
namespace {

std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

int mod4(int v) { return ((v % 4) + 4) % 4; }

void check_qubits(int n) {
  if (n < 1 || n > kMaxPauliQubits) {
    throw ValidationError("Pauli operator qubit count must be in [1, " +
                          std::to_string(kMaxPauliQubits) + "], got " + std::to_string(n));
  }
}

void check_same_size(const PauliOperator& a, const PauliOperator& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionError("Pauli operators act on " + std::to_string(a.num_qubits()) +
                         " and " + std::to_string(b.num_qubits()) + " qubits");
  }
}

constexpr std::array<int, 4> kDigitX = {0, 1, 1, 0};
constexpr std::array<int, 4> kDigitZ = {0, 0, 1, 1};

int digit_from_bits(int x, int z) {
  // (0,0)->0, (1,0)->1, (1,1)->2, (0,1)->3
  return x ? (z ? 2 : 1) : (z ? 3 : 0);
}

}  // namespace

std::string_view to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

LambdaIndex LambdaIndex::make(int l0, int l1, int l2, int l3) {
  if (l0 < 0 || l1 < 0 || l2 < 0 || l3 < 0) {
    throw ValidationError("lambda entries must be non-negative");
  }
  return LambdaIndex{{l0, l1, l2, l3}};
}

Parity LambdaIndex::parity() const {
  return (counts[1] % 2 == 0 && counts[2] % 2 == 0 && counts[3] % 2 == 0) ? Parity::Even
                                                                         : Parity::Odd;
}

std::string LambdaIndex::to_string() const {
  std::ostringstream os;
  os << '[' << counts[0] << ',' << counts[1] << ',' << counts[2] << ',' << counts[3] << ']';
  return os.str();
}

PauliOperator::PauliOperator(int n) : PauliOperator(n, 0, 0, 0) {}

PauliOperator::PauliOperator(int n, std::uint64_t x, std::uint64_t z, int phase)
    : n_(n), x_(x), z_(z), phase_(mod4(phase)) {}

PauliOperator PauliOperator::from_masks(int n, std::uint64_t x_mask, std::uint64_t z_mask,
                                        int phase_exp) {
  check_qubits(n);
  if ((x_mask | z_mask) & ~low_mask(n)) {
    throw ValidationError("mask bits set beyond qubit count " + std::to_string(n));
  }
  return PauliOperator(n, x_mask, z_mask, phase_exp);
}

PauliOperator PauliOperator::from_digits(std::span<const int> digits, int phase_exp) {
  const int n = static_cast<int>(digits.size());
  check_qubits(n);
  std::uint64_t x = 0, z = 0;
  for (int i = 0; i < n; ++i) {
    const int d = digits[i];
    if (d < 0 || d > 3) throw ValidationError("Pauli digit must be 0..3");
    x |= static_cast<std::uint64_t>(kDigitX[d]) << i;
    z |= static_cast<std::uint64_t>(kDigitZ[d]) << i;
  }
  return PauliOperator(n, x, z, phase_exp);
}

PauliOperator PauliOperator::from_packed(int n, PackedIndex index, int phase_exp) {
  check_qubits(n);
  if (n < 32 && (index >> (2 * n)) != 0) {
    throw ValidationError("packed index has digits beyond qubit count");
  }
  std::uint64_t x = 0, z = 0;
  for (int i = 0; i < n; ++i) {
    const int d = static_cast<int>((index >> (2 * i)) & 3u);
    x |= static_cast<std::uint64_t>(kDigitX[d]) << i;
    z |= static_cast<std::uint64_t>(kDigitZ[d]) << i;
  }
  return PauliOperator(n, x, z, phase_exp);
}

PauliOperator PauliOperator::parse(std::string_view literal) {
  int phase = 0;
  std::string_view body = literal;
  if (body.starts_with("+i")) {
    phase = 1;
    body.remove_prefix(2);
  } else if (body.starts_with("-i")) {
    phase = 3;
    body.remove_prefix(2);
  } else if (body.starts_with("+")) {
    body.remove_prefix(1);
  } else if (body.starts_with("-")) {
    phase = 2;
    body.remove_prefix(1);
  }
  if (body.empty()) throw ParseError("empty Pauli literal '" + std::string(literal) + "'");
  std::string digits_text;
  std::array<int, kMaxPauliQubits> digits{};
  if (body.size() > digits.size()) {
    throw ValidationError("Pauli literal longer than " + std::to_string(kMaxPauliQubits) +
                          " qubits");
  }
  for (std::size_t i = 0; i < body.size(); ++i) {
    switch (body[i]) {
      case 'I': digits[i] = 0; break;
      case 'X': digits[i] = 1; break;
      case 'Y': digits[i] = 2; break;
      case 'Z': digits[i] = 3; break;
      default:
        throw ParseError("invalid character '" + std::string(1, body[i]) +
                         "' in Pauli literal '" + std::string(literal) + "'");
    }
  }
  return from_digits(std::span<const int>(digits.data(), body.size()), phase);
}

int PauliOperator::digit(int qubit) const {
  if (qubit < 1 || qubit > n_) throw ValidationError("qubit index out of range");
  const int b = qubit - 1;
  return digit_from_bits(static_cast<int>((x_ >> b) & 1u), static_cast<int>((z_ >> b) & 1u));
}

PackedIndex PauliOperator::packed_index() const {
  PackedIndex out = 0;
  for (int i = 0; i < n_; ++i) {
    const int d = digit_from_bits(static_cast<int>((x_ >> i) & 1u),
                                  static_cast<int>((z_ >> i) & 1u));
    out |= static_cast<PackedIndex>(d) << (2 * i);
  }
  return out;
}

PauliOperator PauliOperator::with_phase(int phase_exp) const {
  return PauliOperator(n_, x_, z_, phase_exp);
}

std::string PauliOperator::to_string() const {
  static constexpr std::array<std::string_view, 4> kPrefix = {"+", "+i", "-", "-i"};
  static constexpr std::array<char, 4> kLetter = {'I', 'X', 'Y', 'Z'};
  std::string out(kPrefix[phase_]);
  for (int q = 1; q <= n_; ++q) out.push_back(kLetter[digit(q)]);
  return out;
}

std::string PauliOperator::index_string() const { return packed_index_string(n_, packed_index()); }

PauliOperator PauliOperator::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw DimensionError("permutation size mismatch");
  std::uint64_t seen = 0, x = 0, z = 0;
  for (int q = 0; q < n_; ++q) {
    const int src = perm[q] - 1;
    if (src < 0 || src >= n_ || ((seen >> src) & 1u)) {
      throw ValidationError("not a permutation of 1..n");
    }
    seen |= std::uint64_t{1} << src;
    x |= ((x_ >> src) & 1u) << q;
    z |= ((z_ >> src) & 1u) << q;
  }
  return PauliOperator(n_, x, z, phase_);
}

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
  check_same_size(a, b);
  // sigma = i^{|x&z|} X^x Z^z, and Z^z1 X^x2 = (-1)^{|z1&x2|} X^x2 Z^z1.
  const std::uint64_t x = a.x_mask() ^ b.x_mask();
  const std::uint64_t z = a.z_mask() ^ b.z_mask();
  const int ya = std::popcount(a.x_mask() & a.z_mask());
  const int yb = std::popcount(b.x_mask() & b.z_mask());
  const int yc = std::popcount(x & z);
  const int swaps = std::popcount(a.z_mask() & b.x_mask());
  const int phase = a.phase_exp() + b.phase_exp() + ya + yb - yc + 2 * swaps;
  return PauliOperator::from_masks(a.num_qubits(), x, z, mod4(phase));
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
  check_same_size(a, b);
  const int s = std::popcount(a.x_mask() & b.z_mask()) + std::popcount(a.z_mask() & b.x_mask());
  return s % 2 == 0;
}

int weight(const PauliOperator& a) { return std::popcount(a.x_mask() | a.z_mask()); }

LambdaIndex lambda_of(const PauliOperator& a) {
  const int n_y = std::popcount(a.x_mask() & a.z_mask());
  const int n_x = std::popcount(a.x_mask() & ~a.z_mask());
  const int n_z = std::popcount(a.z_mask() & ~a.x_mask());
  return LambdaIndex{{a.num_qubits() - n_x - n_y - n_z, n_x, n_y, n_z}};
}

Parity parity(const PauliOperator& a) { return lambda_of(a).parity(); }

Eigen::MatrixXcd to_dense(const PauliOperator& a) {
  const int n = a.num_qubits();
  if (n > kDenseQubitCap) {
    throw ResourceError("dense realization capped at " + std::to_string(kDenseQubitCap) +
                        " qubits");
  }
  using C = std::complex<double>;
  const C I{0.0, 1.0};
  std::array<Eigen::Matrix2cd, 4> single;
  single[0] << 1, 0, 0, 1;
  single[1] << 0, 1, 1, 0;
  single[2] << 0, -I, I, 0;
  single[3] << 1, 0, 0, -1;

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int q = 1; q <= n; ++q) {
    const Eigen::Matrix2cd& s = single[a.digit(q)];
    // out (x) s: the new qubit is the least significant factor.
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
      for (Eigen::Index j = 0; j < out.cols(); ++j) {
        next.block<2, 2>(2 * i, 2 * j) = out(i, j) * s;
      }
    }
    out = std::move(next);
  }
  static constexpr std::array<C, 4> kPhase = {C{1, 0}, C{0, 1}, C{-1, 0}, C{0, -1}};
  return kPhase[a.phase_exp()] * out;
}

int packed_weight(PackedIndex index) {
  constexpr PackedIndex kLow = 0x5555555555555555ull;
  return std::popcount((index | (index >> 1)) & kLow);
}

int packed_digit(PackedIndex index, int qubit) {
  return static_cast<int>((index >> (2 * (qubit - 1))) & 3u);
}

LambdaIndex packed_lambda(int n, PackedIndex index) {
  LambdaIndex lam;
  for (int q = 1; q <= n; ++q) ++lam.counts[packed_digit(index, q)];
  return lam;
}

std::string packed_index_string(int n, PackedIndex index) {
  std::string out;
  out.reserve(n);
  for (int q = 1; q <= n; ++q) out.push_back(static_cast<char>('0' + packed_digit(index, q)));
  return out;
}

PackedIndex parse_index_string(std::string_view digits) {
  if (digits.empty() || digits.size() > kMaxPauliQubits) {
    throw ParseError("index string must have 1.." + std::to_string(kMaxPauliQubits) + " digits");
  }
  PackedIndex out = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char c = digits[i];
    if (c < '0' || c > '3') throw ParseError("index digit must be 0..3");
    out |= static_cast<PackedIndex>(c - '0') << (2 * i);
  }
  return out;
}

}  // namespace kmm
