#pragma once

// Closed-form entanglement quantities: pure-state concurrence, entropy and
// negativity, plus the directly computable mixed-state ones (negativity,
// two-qubit Wootters concurrence).

#include <vector>

#include "polygamy/linalg.hpp"

namespace polygamy {

/// A split of the subsystems into two nonempty, disjoint sides that together
/// cover every subsystem.
class Bipartition {
 public:
  Bipartition(std::vector<int> side_a, std::vector<int> side_b);

  /// Subsystem 0 against all others.
  static Bipartition first_vs_rest(int parties);

  const std::vector<int>& side_a() const { return side_a_; }
  const std::vector<int>& side_b() const { return side_b_; }

  /// Throws std::invalid_argument unless the cut covers exactly `parties`.
  void require_covers(int parties) const;

 private:
  std::vector<int> side_a_;
  std::vector<int> side_b_;
};

/// Regroups a state as a two-subsystem layout {dim(side_a), dim(side_b)}.
StateVector to_bipartite(const StateVector& psi, const Bipartition& cut);
DensityOperator to_bipartite(const DensityOperator& rho, const Bipartition& cut);

/// Singular values of the amplitude matrix across `cut`, descending; their
/// squares are the spectrum of rho_A.
RVector schmidt_coefficients(const StateVector& psi, const Bipartition& cut);

/// sqrt(2 (1 - Tr rho_A^2)).
double concurrence_pure(const StateVector& psi, const Bipartition& cut);

/// 4 sum_{i<j} sum_{k<l} |a_ik a_jl - a_il a_jk|^2 over the amplitude matrix
/// of a two-subsystem state.
double concurrence_sq_from_amplitudes(const StateVector& psi);

/// max(0, l1 - l2 - l3 - l4) over the spin-flip spectrum.
double wootters_concurrence_2q(const DensityOperator& rho);

/// Von Neumann entropy of rho_A in bits.
double entanglement_entropy(const StateVector& psi, const Bipartition& cut);

/// ||rho^{T_A}||_1 - 1.
double negativity(const DensityOperator& rho, const Bipartition& cut);
/// (Tr sqrt(rho_A))^2 - 1.
double negativity(const StateVector& psi, const Bipartition& cut);

double scren_pure(const StateVector& psi, const Bipartition& cut);

/// Descending square roots of the eigenvalues of rho * theta rho^* theta^T
/// for a real symmetric `theta`; returned as the singular values of
/// sqrt(rho) theta conj(sqrt(rho)).
RVector flip_spectrum(const CMatrix& rho, const CMatrix& theta);

/// sigma_y (x) sigma_y as a real 4x4 matrix.
CMatrix spin_flip_2q();

}  // namespace polygamy
