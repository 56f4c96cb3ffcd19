#pragma once

#include <cmath>
#include <vector>

#include "polygamy/linalg.hpp"
#include "polygamy/random.hpp"

namespace testing {

using namespace polygamy;

inline StateVector bell() {
  CVector v = CVector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return StateVector(v, SubsystemLayout({2, 2}));
}

inline DensityOperator projector(const StateVector& psi) { return DensityOperator::from_pure(psi); }

inline DensityOperator maximally_mixed(const SubsystemLayout& layout) {
  const int n = layout.total();
  return DensityOperator(CMatrix::Identity(n, n) / double(n), layout);
}

// W3 marginal on two qubits: (|00><00| + 2 |psi+><psi+|) / 3.
inline DensityOperator w3_pair() {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 2) = m(1, 2) = m(2, 1) = 1.0 / 3.0;
  return DensityOperator(m, SubsystemLayout({2, 2}));
}

inline double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace testing
