#pragma once

#include <array>
#include <cstdint>

#include "polygamy/linalg.hpp"

namespace polygamy {

/// Coefficients of the five-term three-qubit form
///   l0|000> + l1 e^{i phase}|100> + l2|101> + l3|110> + l4|111>.
struct GenSchmidtParams {
  std::array<double, 5> lambdas{1.0, 0.0, 0.0, 0.0, 0.0};
  double phase = 0.0;

  /// l0 = cos t0, l1 = sin t0 cos t1, l2 = sin t0 sin t1 cos t2,
  /// l3 = sin t0 sin t1 sin t2 cos t3, l4 = sin t0 sin t1 sin t2 sin t3.
  static GenSchmidtParams from_angles(const std::array<double, 4>& theta, double phase = 0.0);
};

StateVector gen_schmidt_3q(const GenSchmidtParams& params);

/// Uniform superposition of the n single-excitation qubit states.
StateVector w_state(int n);

/// (|0...0> + |1...1>) / sqrt(2) on n qubits.
StateVector ghz_state(int n);

/// Computational basis state |index> under `layout`.
StateVector basis_state(const SubsystemLayout& layout, int index);

/// Marginal of a Haar-random pure state on layout (x) C^rank.
DensityOperator random_mixed(const SubsystemLayout& layout, int rank, std::uint64_t seed);

}  // namespace polygamy
