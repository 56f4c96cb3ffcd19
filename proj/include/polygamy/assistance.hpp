#pragma once

// "Of assistance" quantities: the concurrence of assistance and its
// block-summed upper bound tau_a, entanglement of assistance, and the
// squared convex-roof extended negativity of assistance (SCRENoA).

#include <array>
#include <utility>
#include <vector>

#include "polygamy/linalg.hpp"
#include "polygamy/roof.hpp"

namespace polygamy {

/// L_A^m (x) L_B^n for the index pairs m = (i, j) on side A and n = (k, l)
/// on side B, where L^m = P^m (-|i><j| + |j><i|) P^m.
struct LOperatorPair {
  std::pair<int, int> m_index;
  std::pair<int, int> n_index;
  CMatrix op;
};

LOperatorPair make_l_operator_pair(int d1, int d2, std::pair<int, int> m_index,
                                   std::pair<int, int> n_index);

/// All D1 * D2 pairs, m-major, each index pair in lexicographic order.
std::vector<LOperatorPair> l_operator_pairs(int d1, int d2);

/// Full spin-flip fidelity sum for a two-qubit state.
double concurrence_of_assistance(const DensityOperator& rho);

/// max over decompositions of sum_i p_i |<phi_i| L |phi_i^*>|, evaluated as
/// the spectral sum of rho * (L rho^* L^T).
double sub_ca(const DensityOperator& rho, const LOperatorPair& pair);

/// Sum of sub_ca over every block of a two-subsystem state.
double tau_a(const DensityOperator& rho);

/// Assisted concurrence across `cut` of a pure state. With a single
/// decomposition available this is the concurrence itself; the polygamy
/// checkers use it for the A|rest side.
double tau_a_pure(const StateVector& psi, const Bipartition& cut);

enum class GsTarget { a_bc, ab, ac };

/// Closed forms for the five-term three-qubit state
///   l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>:
///   A|BC: 2 l0 sqrt(l2^2 + l3^2 + l4^2)
///   AB:   2 l0 sqrt(l3^2 + l4^2)   (subsystems {0, 1})
///   AC:   2 l0 sqrt(l2^2 + l4^2)   (subsystems {0, 2})
double tau_a_gs_analytic(const std::array<double, 5>& lambdas, GsTarget target);

RoofResult eoa_roof(const DensityOperator& rho, RoofConfig config);
/// Best-found entanglement of assistance (a lower bound on the true value).
double eoa(const DensityOperator& rho, const RoofConfig& config);

RoofResult screnoa_roof(const DensityOperator& rho, RoofConfig config);
/// Square of the best-found maximal average negativity.
double screnoa(const DensityOperator& rho, const RoofConfig& config);

}  // namespace polygamy
