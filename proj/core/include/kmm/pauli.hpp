#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace kmm {

// Masks are 64-bit and packed indices use two bits per qubit.
inline constexpr int kMaxPauliQubits = 32;
// Largest n for which 2^n x 2^n dense matrices are materialized.
inline constexpr int kDenseQubitCap = 12;

// Two bits per qubit, qubit 1 in the lowest pair; digit values follow the
// sigma_0..sigma_3 labels (0=I, 1=X, 2=Y, 3=Z).
using PackedIndex = std::uint64_t;

enum class Parity { Even, Odd };
std::string_view to_string(Parity p);

// Counts of the digits 0,1,2,3 in a Pauli index.
struct LambdaIndex {
  std::array<int, 4> counts{};

  static LambdaIndex make(int l0, int l1, int l2, int l3);

  int n() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
  int weight() const { return counts[1] + counts[2] + counts[3]; }
  Parity parity() const;
  std::string to_string() const;  // "[l0,l1,l2,l3]"

  int operator[](std::size_t i) const { return counts[i]; }
  auto operator<=>(const LambdaIndex&) const = default;
};

// i^{phase_exp} * sigma_alpha in (x, z) symplectic form. Position i carries
// I=(0,0), X=(1,0), Y=(1,1), Z=(0,1); bit (i-1) of each mask is qubit i.
class PauliOperator {
 public:
  explicit PauliOperator(int n);  // identity

  static PauliOperator from_masks(int n, std::uint64_t x_mask, std::uint64_t z_mask,
                                  int phase_exp = 0);
  // digits[0] is qubit 1; each digit in {0,1,2,3}.
  static PauliOperator from_digits(std::span<const int> digits, int phase_exp = 0);
  static PauliOperator from_packed(int n, PackedIndex index, int phase_exp = 0);
  // Optional "+", "-", "+i", "-i" prefix, then one of IXYZ per qubit.
  static PauliOperator parse(std::string_view literal);

  int num_qubits() const { return n_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  int phase_exp() const { return phase_; }

  int digit(int qubit) const;  // 1-based
  PackedIndex packed_index() const;
  bool has_identity_masks() const { return x_ == 0 && z_ == 0; }
  bool is_hermitian() const { return phase_ % 2 == 0; }
  PauliOperator with_phase(int phase_exp) const;

  std::string to_string() const;     // literal, e.g. "-iXZIZY"
  std::string index_string() const;  // digits, e.g. "0113"

  // Qubit relabeling: qubit q of the result carries what qubit perm[q-1] of
  // *this carried (perm holds a permutation of 1..n).
  PauliOperator permuted(std::span<const int> perm) const;

  bool operator==(const PauliOperator&) const = default;

 private:
  PauliOperator(int n, std::uint64_t x, std::uint64_t z, int phase);

  int n_;
  std::uint64_t x_;
  std::uint64_t z_;
  int phase_;
};

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);
bool commutes(const PauliOperator& a, const PauliOperator& b);
int weight(const PauliOperator& a);
Parity parity(const PauliOperator& a);
LambdaIndex lambda_of(const PauliOperator& a);

// Kronecker product of the single-qubit matrices (qubit 1 leftmost) times
// i^{phase_exp}. Throws ResourceError above kDenseQubitCap.
Eigen::MatrixXcd to_dense(const PauliOperator& a);

// Helpers on packed indices, shared by the sparse Bloch stores.
int packed_weight(PackedIndex index);
int packed_digit(PackedIndex index, int qubit);  // 1-based
LambdaIndex packed_lambda(int n, PackedIndex index);
std::string packed_index_string(int n, PackedIndex index);
PackedIndex parse_index_string(std::string_view digits);

}  // namespace kmm

template <>
struct std::hash<kmm::PauliOperator> {
  std::size_t operator()(const kmm::PauliOperator& p) const noexcept {
    std::uint64_t h = p.x_mask() * 0x9E3779B97F4A7C15ull;
    h ^= (p.z_mask() + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2));
    h ^= static_cast<std::uint64_t>(p.phase_exp()) * 0xBF58476D1CE4E5B9ull;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};
