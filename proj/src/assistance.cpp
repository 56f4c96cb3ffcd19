#include "polygamy/assistance.hpp"

#include <cmath>
#include <string>

#include "polygamy/measures.hpp"

namespace polygamy {

namespace {

void require_two_subsystems(const DensityOperator& rho, const char* what) {
  if (rho.layout().parties() != 2)
    throw std::invalid_argument(std::string(what) + ": need exactly two subsystems");
}

CMatrix local_l(int d, std::pair<int, int> idx) {
  const auto [i, j] = idx;
  if (i < 0 || j >= d || i >= j) throw std::invalid_argument("LOperatorPair: bad index pair");
  CMatrix projector = CMatrix::Zero(d, d);
  projector(i, i) = 1.0;
  projector(j, j) = 1.0;
  CMatrix generator = CMatrix::Zero(d, d);
  generator(i, j) = -1.0;
  generator(j, i) = 1.0;
  return projector * generator * projector;
}

}  // namespace

LOperatorPair make_l_operator_pair(int d1, int d2, std::pair<int, int> m_index,
                                   std::pair<int, int> n_index) {
  return {m_index, n_index, tensor_product(local_l(d1, m_index), local_l(d2, n_index))};
}

std::vector<LOperatorPair> l_operator_pairs(int d1, int d2) {
  std::vector<LOperatorPair> out;
  for (int i = 0; i < d1; ++i)
    for (int j = i + 1; j < d1; ++j)
      for (int k = 0; k < d2; ++k)
        for (int l = k + 1; l < d2; ++l) out.push_back(make_l_operator_pair(d1, d2, {i, j}, {k, l}));
  return out;
}

double concurrence_of_assistance(const DensityOperator& rho) {
  if (rho.layout().dims() != std::vector<int>{2, 2})
    throw std::invalid_argument("concurrence_of_assistance: state must be two qubits");
  return flip_spectrum(rho.matrix(), spin_flip_2q()).sum();
}

double sub_ca(const DensityOperator& rho, const LOperatorPair& pair) {
  require_two_subsystems(rho, "sub_ca");
  if (pair.op.rows() != rho.layout().total())
    throw std::invalid_argument("sub_ca: operator dimension does not match the state");
  return flip_spectrum(rho.matrix(), pair.op).sum();
}

double tau_a(const DensityOperator& rho) {
  require_two_subsystems(rho, "tau_a");
  double sum = 0.0;
  for (const auto& pair : l_operator_pairs(rho.layout().dim(0), rho.layout().dim(1)))
    sum += sub_ca(rho, pair);
  return sum;
}

double tau_a_pure(const StateVector& psi, const Bipartition& cut) {
  return concurrence_pure(psi, cut);
}

double tau_a_gs_analytic(const std::array<double, 5>& lambdas, GsTarget target) {
  double norm = 0.0;
  for (double l : lambdas) {
    if (l < 0.0) throw std::invalid_argument("tau_a_gs_analytic: negative coefficient");
    norm += l * l;
  }
  if (std::abs(norm - 1.0) > 1e-10)
    throw std::invalid_argument("tau_a_gs_analytic: coefficients are not normalized");
  [[maybe_unused]] const auto [l0, l1, l2, l3, l4] = lambdas;
  switch (target) {
    case GsTarget::a_bc:
      return 2.0 * l0 * std::sqrt(l2 * l2 + l3 * l3 + l4 * l4);
    case GsTarget::ab:
      return 2.0 * l0 * std::sqrt(l3 * l3 + l4 * l4);
    case GsTarget::ac:
      return 2.0 * l0 * std::sqrt(l2 * l2 + l4 * l4);
  }
  throw std::invalid_argument("tau_a_gs_analytic: unknown target");
}

RoofResult eoa_roof(const DensityOperator& rho, RoofConfig config) {
  require_two_subsystems(rho, "eoa");
  config.direction = RoofDirection::maximize;
  const Bipartition cut({0}, {1});
  return roof_optimize(
      rho, [&cut](const StateVector& psi) { return entanglement_entropy(psi, cut); }, config);
}

double eoa(const DensityOperator& rho, const RoofConfig& config) {
  return eoa_roof(rho, config).value;
}

RoofResult screnoa_roof(const DensityOperator& rho, RoofConfig config) {
  require_two_subsystems(rho, "screnoa");
  config.direction = RoofDirection::maximize;
  const Bipartition cut({0}, {1});
  return roof_optimize(
      rho, [&cut](const StateVector& psi) { return negativity(psi, cut); }, config);
}

double screnoa(const DensityOperator& rho, const RoofConfig& config) {
  const double n = screnoa_roof(rho, config).value;
  return n * n;
}

}  // namespace polygamy
