#include "polygamy/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace polygamy {

namespace {

std::vector<int> cut_order(const Bipartition& cut) {
  std::vector<int> order = cut.side_a();
  order.insert(order.end(), cut.side_b().begin(), cut.side_b().end());
  return order;
}

SubsystemLayout bipartite_layout(const SubsystemLayout& layout, const Bipartition& cut) {
  return SubsystemLayout({layout.select(cut.side_a()).total(), layout.select(cut.side_b()).total()});
}

}  // namespace

Bipartition::Bipartition(std::vector<int> side_a, std::vector<int> side_b)
    : side_a_(std::move(side_a)), side_b_(std::move(side_b)) {
  if (side_a_.empty() || side_b_.empty())
    throw std::invalid_argument("Bipartition: both sides must be nonempty");
  std::vector<int> all = side_a_;
  all.insert(all.end(), side_b_.begin(), side_b_.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw std::invalid_argument("Bipartition: sides overlap");
  if (all.front() < 0) throw std::invalid_argument("Bipartition: negative subsystem index");
}

Bipartition Bipartition::first_vs_rest(int parties) {
  std::vector<int> rest;
  for (int k = 1; k < parties; ++k) rest.push_back(k);
  return Bipartition({0}, std::move(rest));
}

void Bipartition::require_covers(int parties) const {
  const auto n = side_a_.size() + side_b_.size();
  const int largest = std::max(*std::max_element(side_a_.begin(), side_a_.end()),
                               *std::max_element(side_b_.begin(), side_b_.end()));
  if (static_cast<int>(n) != parties || largest >= parties)
    throw std::invalid_argument("Bipartition: cut does not cover all " + std::to_string(parties) +
                                " subsystems");
}

StateVector to_bipartite(const StateVector& psi, const Bipartition& cut) {
  cut.require_covers(psi.layout().parties());
  return StateVector(permute_subsystems(psi.amplitudes(), psi.layout(), cut_order(cut)),
                     bipartite_layout(psi.layout(), cut));
}

DensityOperator to_bipartite(const DensityOperator& rho, const Bipartition& cut) {
  cut.require_covers(rho.layout().parties());
  return DensityOperator(permute_subsystems(rho.matrix(), rho.layout(), cut_order(cut)),
                         bipartite_layout(rho.layout(), cut));
}

RVector schmidt_coefficients(const StateVector& psi, const Bipartition& cut) {
  const StateVector flat = to_bipartite(psi, cut);
  const int da = flat.layout().dim(0);
  const int db = flat.layout().dim(1);
  const Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      coeffs(flat.amplitudes().data(), da, db);
  Eigen::JacobiSVD<CMatrix> svd{CMatrix(coeffs)};
  return svd.singularValues();
}

double concurrence_pure(const StateVector& psi, const Bipartition& cut) {
  // 2 (1 - sum p^2) = 4 sum_{i<j} p_i p_j for a normalized spectrum; the
  // pairwise form stays accurate when the state is nearly product.
  const RVector p = schmidt_coefficients(psi, cut).array().square();
  double cross = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    for (Eigen::Index j = i + 1; j < p.size(); ++j) cross += p(i) * p(j);
  return 2.0 * std::sqrt(cross);
}

double concurrence_sq_from_amplitudes(const StateVector& psi) {
  const SubsystemLayout& layout = psi.layout();
  if (layout.parties() != 2)
    throw std::invalid_argument("concurrence_sq_from_amplitudes: need exactly two subsystems");
  const int d1 = layout.dim(0);
  const int d2 = layout.dim(1);
  auto a = [&](int i, int k) { return psi[i * d2 + k]; };
  double sum = 0.0;
  for (int i = 0; i < d1; ++i)
    for (int j = i + 1; j < d1; ++j)
      for (int k = 0; k < d2; ++k)
        for (int l = k + 1; l < d2; ++l) sum += std::norm(a(i, k) * a(j, l) - a(i, l) * a(j, k));
  return 4.0 * sum;
}

CMatrix spin_flip_2q() {
  CMatrix flip = CMatrix::Zero(4, 4);
  flip(0, 3) = -1.0;
  flip(1, 2) = 1.0;
  flip(2, 1) = 1.0;
  flip(3, 0) = -1.0;
  return flip;
}

RVector flip_spectrum(const CMatrix& rho, const CMatrix& theta) {
  const CMatrix root = psd_sqrt(rho);
  const CMatrix m = root * theta * root.conjugate();
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues();  // already descending
}

double wootters_concurrence_2q(const DensityOperator& rho) {
  if (rho.layout().dims() != std::vector<int>{2, 2})
    throw std::invalid_argument("wootters_concurrence_2q: state must be two qubits");
  const RVector l = flip_spectrum(rho.matrix(), spin_flip_2q());
  return std::max(0.0, l(0) - l(1) - l(2) - l(3));
}

double entanglement_entropy(const StateVector& psi, const Bipartition& cut) {
  const RVector p = schmidt_coefficients(psi, cut).array().square();
  double s = 0.0;
  for (double x : p)
    if (x > 0.0) s -= x * std::log2(x);
  return std::max(0.0, s);
}

double negativity(const DensityOperator& rho, const Bipartition& cut) {
  cut.require_covers(rho.layout().parties());
  // Transposing every side-A subsystem digit-wise equals T_A on the
  // regrouped bipartite matrix, so no reordering is needed.
  const CMatrix pt = partial_transpose(rho.matrix(), rho.layout(), cut.side_a());
  return std::max(0.0, trace_norm(pt) - 1.0);
}

double negativity(const StateVector& psi, const Bipartition& cut) {
  // (Tr sqrt(rho_A))^2 - 1 = 2 sum_{i<j} s_i s_j over Schmidt coefficients.
  const RVector s = schmidt_coefficients(psi, cut);
  double cross = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    for (Eigen::Index j = i + 1; j < s.size(); ++j) cross += s(i) * s(j);
  return 2.0 * cross;
}

double scren_pure(const StateVector& psi, const Bipartition& cut) {
  const double n = negativity(psi, cut);
  return n * n;
}

}  // namespace polygamy
