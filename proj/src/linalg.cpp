#include "polygamy/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "polygamy/random.hpp"

namespace polygamy {

namespace {

void require_valid_subsystems(const SubsystemLayout& layout, std::span<const int> subsystems,
                              const char* what) {
  std::vector<int> seen;
  for (int s : subsystems) {
    if (s < 0 || s >= layout.parties())
      throw std::invalid_argument(std::string(what) + ": subsystem index " + std::to_string(s) +
                                  " out of range");
    if (std::find(seen.begin(), seen.end(), s) != seen.end())
      throw std::invalid_argument(std::string(what) + ": duplicate subsystem " +
                                  std::to_string(s));
    seen.push_back(s);
  }
}

// Basis digits of `index` under `layout`.
std::vector<int> digits_of(int index, const SubsystemLayout& layout) {
  std::vector<int> digits(static_cast<std::size_t>(layout.parties()));
  for (int k = layout.parties() - 1; k >= 0; --k) {
    digits[static_cast<std::size_t>(k)] = index % layout.dim(k);
    index /= layout.dim(k);
  }
  return digits;
}

// new_index -> old_index for the subsystem reordering `order`.
std::vector<int> permutation_map(const SubsystemLayout& layout, std::span<const int> order) {
  if (static_cast<int>(order.size()) != layout.parties())
    throw std::invalid_argument("permute_subsystems: order must name every subsystem");
  require_valid_subsystems(layout, order, "permute_subsystems");
  const SubsystemLayout permuted = layout.select(order);
  const std::vector<int> old_strides = layout.strides();
  std::vector<int> map(static_cast<std::size_t>(layout.total()));
  for (int n = 0; n < layout.total(); ++n) {
    const std::vector<int> digits = digits_of(n, permuted);
    int old = 0;
    for (std::size_t k = 0; k < order.size(); ++k)
      old += digits[k] * old_strides[static_cast<std::size_t>(order[k])];
    map[static_cast<std::size_t>(n)] = old;
  }
  return map;
}

}  // namespace

SubsystemLayout::SubsystemLayout(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("SubsystemLayout: no subsystems");
  for (int d : dims_) {
    if (d < 2) throw std::invalid_argument("SubsystemLayout: every dimension must be >= 2");
    total_ *= d;
  }
}

SubsystemLayout SubsystemLayout::select(std::span<const int> subsystems) const {
  std::vector<int> out;
  out.reserve(subsystems.size());
  for (int s : subsystems) out.push_back(dim(s));
  return SubsystemLayout(std::move(out));
}

std::vector<int> SubsystemLayout::strides() const {
  std::vector<int> s(dims_.size(), 1);
  for (int k = parties() - 2; k >= 0; --k)
    s[static_cast<std::size_t>(k)] = s[static_cast<std::size_t>(k + 1)] * dim(k + 1);
  return s;
}

StateVector::StateVector(CVector amplitudes, SubsystemLayout layout)
    : amplitudes_(std::move(amplitudes)), layout_(std::move(layout)) {
  if (amplitudes_.size() != layout_.total())
    throw std::invalid_argument("StateVector: amplitude count " +
                                std::to_string(amplitudes_.size()) + " != layout total " +
                                std::to_string(layout_.total()));
  if (!amplitudes_.allFinite()) throw std::invalid_argument("StateVector: non-finite amplitude");
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("StateVector: amplitudes are not normalized");
}

StateVector StateVector::normalized(CVector amplitudes, SubsystemLayout layout) {
  const double n = amplitudes.norm();
  if (!(n > 0.0)) throw std::invalid_argument("StateVector: zero vector");
  amplitudes /= n;
  return StateVector(std::move(amplitudes), std::move(layout));
}

DensityOperator::DensityOperator(const CMatrix& matrix, SubsystemLayout layout)
    : layout_(std::move(layout)) {
  if (matrix.rows() != layout_.total() || matrix.cols() != layout_.total())
    throw std::invalid_argument("DensityOperator: matrix side does not match layout total");
  if (!matrix.allFinite()) throw std::invalid_argument("DensityOperator: non-finite entry");
  if (hermiticity_error(matrix) > 1e-12)
    throw std::invalid_argument("DensityOperator: matrix is not Hermitian");
  if (std::abs(matrix.trace() - cplx(1.0, 0.0)) > 1e-12)
    throw std::invalid_argument("DensityOperator: trace is not 1");
  matrix_ = 0.5 * (matrix + matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(matrix_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kEigenClamp)
    throw std::invalid_argument("DensityOperator: matrix is not positive semidefinite");
}

DensityOperator DensityOperator::from_pure(const StateVector& psi) {
  return DensityOperator(psi.amplitudes() * psi.amplitudes().adjoint(), psi.layout());
}

CMatrix tensor_product(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CVector tensor_product(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

DensityOperator partial_trace(const DensityOperator& rho, std::span<const int> keep) {
  const SubsystemLayout& layout = rho.layout();
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  require_valid_subsystems(layout, keep, "partial_trace");

  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  std::vector<int> order = kept;
  for (int k = 0; k < layout.parties(); ++k)
    if (!std::binary_search(kept.begin(), kept.end(), k)) order.push_back(k);

  // After moving the kept subsystems to the front, the traced block is the
  // fast index: reduced(a, a') = sum_t rho(a*T + t, a'*T + t).
  const CMatrix m = permute_subsystems(rho.matrix(), layout, order);
  const SubsystemLayout out_layout = layout.select(kept);
  const int kept_total = out_layout.total();
  const int traced_total = layout.total() / kept_total;
  CMatrix out = CMatrix::Zero(kept_total, kept_total);
  for (int a = 0; a < kept_total; ++a)
    for (int b = 0; b < kept_total; ++b) {
      cplx acc = 0.0;
      for (int t = 0; t < traced_total; ++t) acc += m(a * traced_total + t, b * traced_total + t);
      out(a, b) = acc;
    }
  return DensityOperator(out, out_layout);
}

DensityOperator partial_trace(const StateVector& psi, std::span<const int> keep) {
  const SubsystemLayout& layout = psi.layout();
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  require_valid_subsystems(layout, keep, "partial_trace");

  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  std::vector<int> order = kept;
  for (int k = 0; k < layout.parties(); ++k)
    if (!std::binary_search(kept.begin(), kept.end(), k)) order.push_back(k);

  const CVector v = permute_subsystems(psi.amplitudes(), layout, order);
  const SubsystemLayout out_layout = layout.select(kept);
  const int kept_total = out_layout.total();
  const int traced_total = layout.total() / kept_total;
  // Row-major reshape: coefficient matrix M(a, t) = v(a*T + t).
  const Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      coeffs(v.data(), kept_total, traced_total);
  const CMatrix reduced = coeffs * coeffs.adjoint();
  return DensityOperator(reduced / reduced.trace().real(), out_layout);
}

CMatrix partial_transpose(const DensityOperator& rho, int subsystem) {
  const int s[] = {subsystem};
  return partial_transpose(rho.matrix(), rho.layout(), s);
}

CMatrix partial_transpose(const CMatrix& m, const SubsystemLayout& layout,
                          std::span<const int> subsystems) {
  require_valid_subsystems(layout, subsystems, "partial_transpose");
  if (m.rows() != layout.total() || m.cols() != layout.total())
    throw std::invalid_argument("partial_transpose: matrix side does not match layout");
  const std::vector<int> strides = layout.strides();
  CMatrix out(m.rows(), m.cols());
  for (int i = 0; i < layout.total(); ++i)
    for (int j = 0; j < layout.total(); ++j) {
      int si = i;
      int sj = j;
      for (int s : subsystems) {
        const int stride = strides[static_cast<std::size_t>(s)];
        const int di = (i / stride) % layout.dim(s);
        const int dj = (j / stride) % layout.dim(s);
        si += (dj - di) * stride;
        sj += (di - dj) * stride;
      }
      out(i, j) = m(si, sj);
    }
  return out;
}

CVector permute_subsystems(const CVector& v, const SubsystemLayout& layout,
                           std::span<const int> order) {
  const std::vector<int> map = permutation_map(layout, order);
  CVector out(v.size());
  for (std::size_t n = 0; n < map.size(); ++n) out(static_cast<Eigen::Index>(n)) = v(map[n]);
  return out;
}

CMatrix permute_subsystems(const CMatrix& m, const SubsystemLayout& layout,
                           std::span<const int> order) {
  const std::vector<int> map = permutation_map(layout, order);
  const auto n = static_cast<Eigen::Index>(map.size());
  CMatrix out(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      out(r, c) = m(map[static_cast<std::size_t>(r)], map[static_cast<std::size_t>(c)]);
  return out;
}

double trace_norm(const CMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("trace_norm: matrix is not square");
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues().sum();
}

double hermiticity_error(const CMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Eigensystem hermitian_eigensystem(const CMatrix& h) {
  if (h.rows() != h.cols())
    throw std::invalid_argument("hermitian_eigensystem: matrix is not square");
  if (hermiticity_error(h) > 1e-10)
    throw std::invalid_argument("hermitian_eigensystem: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (h + h.adjoint()));
  if (solver.info() != Eigen::Success) throw NumericError("hermitian_eigensystem: no convergence");
  // Eigen returns ascending order.
  Eigensystem out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

CMatrix psd_sqrt(const CMatrix& rho) {
  const Eigensystem es = hermitian_eigensystem(rho);
  RVector roots(es.values.size());
  for (Eigen::Index k = 0; k < es.values.size(); ++k) {
    const double lambda = es.values(k);
    if (lambda < -kEigenClamp) throw std::domain_error("psd_sqrt: matrix is not PSD");
    roots(k) = std::sqrt(std::max(lambda, 0.0));
  }
  return es.vectors * roots.asDiagonal() * es.vectors.adjoint();
}

std::optional<StateVector> pure_state_of(const DensityOperator& rho) {
  const Eigensystem es = hermitian_eigensystem(rho.matrix());
  if (es.values(0) < 1.0 - 1e-10) return std::nullopt;
  return StateVector::normalized(es.vectors.col(0), rho.layout());
}

StateVector haar_random_pure(const SubsystemLayout& layout, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return StateVector::normalized(complex_gaussian(rng, layout.total(), 1).col(0), layout);
}

CMatrix haar_random_unitary(int dim, std::uint64_t seed) {
  Rng rng = make_rng(seed, 1);
  const CMatrix g = complex_gaussian(rng, dim, dim);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix column phases so the distribution is exactly Haar.
  for (int k = 0; k < dim; ++k) {
    const cplx d = r(k, k);
    if (std::abs(d) > 0.0) q.col(k) *= d / std::abs(d);
  }
  return q;
}

}  // namespace polygamy
