#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kmm/bloch.hpp"
#include "kmm/pauli.hpp"

namespace kmm {

// Largest group order materialized by close().
inline constexpr std::size_t kMaxGroupOrder = std::size_t{1} << 20;

struct GroupFlags {
  bool is_closed = false;
  bool is_abelian = false;
  bool is_involutive = false;  // every element squares to +identity
  bool is_hermitian = false;   // no +-i elements and -identity absent
  std::size_t order = 0;
};

class PauliSubgroup {
 public:
  // Unclosed generator set; flags stay default until close().
  explicit PauliSubgroup(std::vector<PauliOperator> generators);

  int num_qubits() const { return n_; }
  const std::vector<PauliOperator>& generators() const { return generators_; }
  // Sorted by (packed index, phase); empty when not closed.
  const std::vector<PauliOperator>& elements() const { return elements_; }
  const GroupFlags& flags() const { return flags_; }
  bool contains(const PauliOperator& p) const;

 private:
  friend PauliSubgroup close(const std::vector<PauliOperator>& generators);

  int n_;
  std::vector<PauliOperator> generators_;
  std::vector<PauliOperator> elements_;
  GroupFlags flags_;
};

// Closure under multiply with phases tracked. Throws ResourceError when the
// order would exceed kMaxGroupOrder.
PauliSubgroup close(const std::vector<PauliOperator>& generators);

struct BalancedValidation {
  bool pure = false;
  std::vector<std::string> reasons;
};

// Pure iff order 2^n, abelian, involutive and hermitian.
BalancedValidation validate_balanced(const PauliSubgroup& group);

struct BalancedState {
  PauliSubgroup group;
  BlochVector bloch;
  int mm_level;
};

// Minimum weight over non-identity elements, minus one.
int mm_level(const PauliSubgroup& group);
int min_nonidentity_weight(const PauliSubgroup& group);

BalancedState build_state(const PauliSubgroup& group);

// Unit vector spanning the range of rho_S = 2^-n sum_{s in S} s, with the
// first nonzero amplitude made real and positive. n <= kDenseQubitCap.
StateVector state_vector_of(const PauliSubgroup& group);

}  // namespace kmm
