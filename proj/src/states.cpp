#include "polygamy/states.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "polygamy/random.hpp"

namespace polygamy {

GenSchmidtParams GenSchmidtParams::from_angles(const std::array<double, 4>& theta, double phase) {
  const auto [t0, t1, t2, t3] = theta;
  GenSchmidtParams p;
  p.lambdas = {std::cos(t0), std::sin(t0) * std::cos(t1),
               std::sin(t0) * std::sin(t1) * std::cos(t2),
               std::sin(t0) * std::sin(t1) * std::sin(t2) * std::cos(t3),
               std::sin(t0) * std::sin(t1) * std::sin(t2) * std::sin(t3)};
  p.phase = phase;
  return p;
}

StateVector gen_schmidt_3q(const GenSchmidtParams& params) {
  double norm = 0.0;
  for (double l : params.lambdas) {
    if (l < 0.0) throw std::invalid_argument("gen_schmidt_3q: negative coefficient");
    norm += l * l;
  }
  if (std::abs(norm - 1.0) > 1e-10)
    throw std::invalid_argument("gen_schmidt_3q: coefficients are not normalized");
  const auto& l = params.lambdas;
  CVector amps = CVector::Zero(8);
  amps(0) = l[0];
  amps(4) = l[1] * std::polar(1.0, params.phase);
  amps(5) = l[2];
  amps(6) = l[3];
  amps(7) = l[4];
  return StateVector::normalized(std::move(amps), SubsystemLayout({2, 2, 2}));
}

StateVector w_state(int n) {
  if (n < 2) throw std::invalid_argument("w_state: need at least two qubits");
  SubsystemLayout layout(std::vector<int>(static_cast<std::size_t>(n), 2));
  CVector amps = CVector::Zero(layout.total());
  for (int q = 0; q < n; ++q) amps(1 << q) = 1.0;
  return StateVector::normalized(std::move(amps), std::move(layout));
}

StateVector ghz_state(int n) {
  if (n < 2) throw std::invalid_argument("ghz_state: need at least two qubits");
  SubsystemLayout layout(std::vector<int>(static_cast<std::size_t>(n), 2));
  CVector amps = CVector::Zero(layout.total());
  amps(0) = 1.0;
  amps(layout.total() - 1) = 1.0;
  return StateVector::normalized(std::move(amps), std::move(layout));
}

StateVector basis_state(const SubsystemLayout& layout, int index) {
  if (index < 0 || index >= layout.total())
    throw std::invalid_argument("basis_state: index out of range");
  CVector amps = CVector::Zero(layout.total());
  amps(index) = 1.0;
  return StateVector(std::move(amps), layout);
}

DensityOperator random_mixed(const SubsystemLayout& layout, int rank, std::uint64_t seed) {
  if (rank < 1 || rank > layout.total())
    throw std::invalid_argument("random_mixed: rank " + std::to_string(rank) + " out of range");
  // Tracing out a rank-dimensional ancilla from a Haar pure state is the same
  // as G G^dagger / Tr for a Ginibre matrix G of shape total x rank.
  Rng rng = make_rng(seed, 2);
  const CMatrix g = complex_gaussian(rng, layout.total(), rank);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityOperator(rho, layout);
}

}  // namespace polygamy
