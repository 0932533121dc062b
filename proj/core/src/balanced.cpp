#include "kmm/balanced.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <deque>
#include <unordered_set>

#include "kmm/errors.hpp"

namespace kmm {
namespace {

bool element_less(const PauliOperator& a, const PauliOperator& b) {
  const auto ia = a.packed_index(), ib = b.packed_index();
  return ia != ib ? ia < ib : a.phase_exp() < b.phase_exp();
}

void require_closed(const PauliSubgroup& group) {
  if (!group.flags().is_closed) throw ValidationError("Pauli subgroup is not closed");
}

}  // namespace

PauliSubgroup::PauliSubgroup(std::vector<PauliOperator> generators)
    : n_(0), generators_(std::move(generators)) {
  if (generators_.empty()) throw ValidationError("at least one generator is required");
  n_ = generators_.front().num_qubits();
  for (const auto& g : generators_) {
    if (g.num_qubits() != n_) throw DimensionError("generators act on different qubit counts");
  }
}

bool PauliSubgroup::contains(const PauliOperator& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p, element_less);
}

PauliSubgroup close(const std::vector<PauliOperator>& generators) {
  PauliSubgroup group(generators);
  const int n = group.num_qubits();

  std::unordered_set<PauliOperator> seen;
  std::deque<PauliOperator> frontier;
  const PauliOperator identity(n);
  seen.insert(identity);
  frontier.push_back(identity);
  while (!frontier.empty()) {
    const PauliOperator current = frontier.front();
    frontier.pop_front();
    for (const auto& g : group.generators_) {
      PauliOperator next = multiply(current, g);
      if (seen.insert(next).second) {
        if (seen.size() > kMaxGroupOrder) {
          throw ResourceError("group order exceeds 2^20");
        }
        frontier.push_back(std::move(next));
      }
    }
  }

  group.elements_.assign(seen.begin(), seen.end());
  std::sort(group.elements_.begin(), group.elements_.end(), element_less);

  GroupFlags& f = group.flags_;
  f.is_closed = true;
  f.order = group.elements_.size();
  f.is_abelian = true;
  for (std::size_t i = 0; i < generators.size() && f.is_abelian; ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (!commutes(generators[i], generators[j])) {
        f.is_abelian = false;
        break;
      }
    }
  }
  f.is_involutive = std::all_of(group.elements_.begin(), group.elements_.end(),
                                [](const PauliOperator& p) { return p.is_hermitian(); });
  f.is_hermitian = f.is_involutive && !group.contains(identity.with_phase(2));
  return group;
}

BalancedValidation validate_balanced(const PauliSubgroup& group) {
  require_closed(group);
  const int n = group.num_qubits();
  const GroupFlags& f = group.flags();
  BalancedValidation out;
  if (n >= 63 || f.order != (std::size_t{1} << n)) {
    out.reasons.push_back("order " + std::to_string(f.order) + " != 2^n = " +
                          (n < 63 ? std::to_string(std::size_t{1} << n) : "2^" + std::to_string(n)));
  }
  if (!f.is_abelian) out.reasons.push_back("group is not abelian");
  if (!f.is_involutive) {
    out.reasons.push_back("group contains complex elements +-i*sigma (square to -identity)");
  }
  if (group.contains(PauliOperator(n).with_phase(2))) {
    out.reasons.push_back("group contains -identity (normalization/hermiticity)");
  }
  out.pure = out.reasons.empty() && f.is_hermitian;
  return out;
}

int min_nonidentity_weight(const PauliSubgroup& group) {
  require_closed(group);
  int best = INT_MAX;
  for (const auto& p : group.elements()) {
    if (!p.has_identity_masks()) best = std::min(best, weight(p));
  }
  if (best == INT_MAX) throw ValidationError("group has no non-identity element");
  return best;
}

int mm_level(const PauliSubgroup& group) { return min_nonidentity_weight(group) - 1; }

BalancedState build_state(const PauliSubgroup& group) {
  const auto check = validate_balanced(group);
  if (!check.pure) {
    std::string why;
    for (const auto& r : check.reasons) why += (why.empty() ? "" : "; ") + r;
    throw ValidationError("group does not define a pure balanced state: " + why);
  }
  const int n = group.num_qubits();
  const double unit = std::ldexp(1.0, -n);
  std::vector<BlochVector::Entry> entries;
  entries.reserve(group.elements().size());
  for (const auto& p : group.elements()) {
    entries.emplace_back(p.packed_index(), p.phase_exp() == 2 ? -unit : unit);
  }
  return BalancedState{group, BlochVector(n, std::move(entries)), mm_level(group)};
}

StateVector state_vector_of(const PauliSubgroup& group) {
  const auto check = validate_balanced(group);
  if (!check.pure) throw ValidationError("group does not define a pure balanced state");
  const int n = group.num_qubits();
  if (n > kDenseQubitCap) throw ResourceError("state vector construction capped at 12 qubits");

  // rho_S |b> for successive basis states until the projection is nonzero.
  const std::size_t dim = std::size_t{1} << n;
  for (std::size_t b = 0; b < dim; ++b) {
    const StateVector basis = StateVector::basis(n, b);
    std::vector<Amplitude> acc(dim);
    for (const auto& s : group.elements()) {
      const StateVector image = apply(s, basis);
      for (std::size_t i = 0; i < dim; ++i) acc[i] += image.amplitudes()[i];
    }
    double norm = 0.0;
    for (const auto& a : acc) norm += std::norm(a);
    if (norm < 1e-6) continue;
    for (const auto& a : acc) {
      if (std::abs(a) > 1e-12) {
        const Amplitude phase = std::conj(a) / std::abs(a);
        for (auto& v : acc) v *= phase;
        break;
      }
    }
    return StateVector::normalized(n, std::move(acc));
  }
  throw ValidationError("balanced projector is zero");
}

}  // namespace kmm
