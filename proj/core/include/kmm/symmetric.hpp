#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "kmm/bloch.hpp"
#include "kmm/pauli.hpp"

namespace kmm {

// Multiplicities are stored as uint64, which bounds n.
inline constexpr int kMaxSymmetricQubits = 31;

// Permutation-invariant pure state as Dicke coefficients d_0..d_n, where
// |S_k> is the uniform superposition of weight-k basis states.
class SymmetricState {
 public:
  SymmetricState(int n, std::vector<Amplitude> dicke);  // |d| = 1 within 1e-12
  static SymmetricState normalized(int n, std::vector<Amplitude> dicke);
  // Sparse constructor: unnormalized (k, d_k) terms.
  static SymmetricState from_terms(int n, std::span<const std::pair<int, Amplitude>> terms);

  int num_qubits() const { return n_; }
  std::span<const Amplitude> dicke() const { return dicke_; }

 private:
  int n_;
  std::vector<Amplitude> dicke_;
};

// Full 2^n amplitude vector, n <= 20.
StateVector to_state_vector(const SymmetricState& s);
double fidelity(const SymmetricState& a, const SymmetricState& b);

// ---- Majorana representation --------------------------------------------

// Finite roots z_i of P(z) = sum_k (-1)^k C(n,k)^{1/2} d_k z^k, listed with
// multiplicity, plus the count of roots at infinity (degree deficit).
struct MajoranaSpec {
  int n = 0;
  std::vector<Amplitude> finite_roots;
  int roots_at_infinity = 0;

  void validate() const;
};

using Point3 = std::array<double, 3>;

Amplitude majorana_polynomial(const SymmetricState& s, Amplitude z);

// Solves sum_k A_ik d_k = 0 with A_ik = (-1)^k C(n,k)^{1/2} z_i^k; a root of
// multiplicity m contributes the derivative rows 0..m-1 and each root at
// infinity forces the highest remaining coefficient to vanish. The unit null
// vector is returned with its largest entry real and positive. Throws
// DegeneracyError when the null space is not one-dimensional.
SymmetricState dicke_from_majorana(const MajoranaSpec& m);

// Companion-matrix eigenvalues polished by Newton steps.
MajoranaSpec majorana_from_dicke(const SymmetricState& s);

// Bloch-sphere points of the one-qubit factors: z = x/y for x|0> + y|1>,
// i.e. z = (X - iY)/(1 - Z); the north pole is the root at infinity.
std::vector<Point3> majorana_points(const MajoranaSpec& m);
MajoranaSpec majorana_from_points(std::span<const Point3> points);
SymmetricState state_from_points(std::span<const Point3> points);

// ---- Projected Pauli matrices and lambda components ----------------------

std::vector<LambdaIndex> all_lambdas(int n);  // lexicographic in (l0,l1,l2,l3)
std::uint64_t multinomial(const LambdaIndex& lam);

// (n+1)x(n+1) matrix <S_k| sigma_alpha |S_k'> for any alpha with lambda(alpha)
// = lam, from the closed-form sum over (k0,k1,k2,k3).
Eigen::MatrixXcd tau_matrix(const LambdaIndex& lam);

struct LambdaComponent {
  LambdaIndex lambda;
  Amplitude value;  // 2^-n d^dagger tau d; imaginary part ~ 0
  std::uint64_t multiplicity;
  Parity parity;
  int weight;
};

class LambdaComponentTable {
 public:
  LambdaComponentTable(int n, std::vector<LambdaComponent> entries);

  int num_qubits() const { return n_; }
  std::span<const LambdaComponent> entries() const { return entries_; }
  const LambdaComponent& at(const LambdaIndex& lam) const;
  double value(const LambdaIndex& lam) const { return at(lam).value.real(); }
  double max_imaginary() const;

 private:
  std::size_t slot(const LambdaIndex& lam) const;

  int n_;
  std::vector<LambdaComponent> entries_;
  std::vector<std::int32_t> lookup_;  // (l1,l2,l3) -> entry position
};

LambdaComponentTable lambda_components(const SymmetricState& s);

struct OddCensus {
  int n = 0;
  std::uint64_t zero_odd = 0;
  std::uint64_t total_odd = 0;
  double ratio = 0.0;
  double threshold = 0.0;
};

OddCensus odd_census(const LambdaComponentTable& table, double tol = kDefaultZeroTolerance);
OddCensus odd_census(const SymmetricState& s, double tol = kDefaultZeroTolerance);

struct LambdaCount {
  std::uint64_t total = 0;
  std::uint64_t odd = 0;
  std::uint64_t even = 0;
};

// Closed form: total C(n+3,3), even C(floor(n/2)+3,3).
LambdaCount count_lambda(int n);

struct ConstraintReport {
  // even_residuals[t-1]: |sum_{a_1..a_t} r_{a1a1..atat} - 2^-n|
  std::vector<double> even_residuals;
  // cycle_residuals[t]: the epsilon-weighted sum over a disjoint 3-cycle
  // with t transpositions, for every t with 2t + 3 <= n and t < t_max.
  std::vector<double> cycle_residuals;
  double max_even_residual = 0.0;
  double max_cycle_residual = 0.0;
};

ConstraintReport check_symmetry_constraints(const LambdaComponentTable& table, int t_max);
ConstraintReport check_symmetry_constraints(const SymmetricState& s, int t_max);

struct TwoBodyWitness {
  bool is_2mm = false;
  LambdaIndex witness_lambda;
  double value = 0.0;
};

// The largest of r[n-2,2,0,0], r[n-2,0,2,0], r[n-2,0,0,2]; these sum to 2^-n,
// so its magnitude is at least 2^-n / 3.
TwoBodyWitness two_body_witness(const LambdaComponentTable& table);
TwoBodyWitness two_body_witness(const SymmetricState& s);

// ---- Collective rotations --------------------------------------------------

// U^{(x)n} on the Dicke basis for U = Rz(a) Ry(b) Rz(c), R(theta) = exp(-i theta sigma/2).
Eigen::MatrixXcd rotation_operator(int n, double a, double b, double c);
SymmetricState rotate(const SymmetricState& s, double a, double b, double c);

// ---- Reference states ------------------------------------------------------

struct ReferenceRow {
  std::string name;  // psi4 .. psi12, psi20
  int n;
  std::uint64_t expected_zero_odd;
  std::uint64_t expected_total_odd;
  std::string description;
};

std::vector<ReferenceRow> reference_rows();
std::vector<std::pair<std::string, SymmetricState>> reference_states();
// psi4..psi10 and psi12 (read as (|S_2>+|S_8>)/sqrt2 on 12 qubits).
// psi20 needs a coordinates file and throws NotAvailableError here.
SymmetricState reference_state(std::string_view name);

// Vertex sets of the regular solids in their axis-aligned orientation:
// tetrahedron (+-1,+-1,+-1) with an even number of minus signs, octahedron
// (+-e_i), cube (+-1,+-1,+-1), icosahedron cyclic (0,+-1,+-phi), dodecahedron (+-1,+-1,+-1) plus
// cyclic (0,+-1/phi,+-phi). Unit-normalized.
std::vector<Point3> platonic_points(std::string_view solid);

}  // namespace kmm
