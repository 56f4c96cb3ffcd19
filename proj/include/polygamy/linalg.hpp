#pragma once

// Dense complex linear algebra over small tensor-product Hilbert spaces.
//
// Index convention: subsystem 0 is the slowest-varying digit of a basis
// index (row-major), so kron(a, b) acts on layout {dim(a), dim(b)}.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace polygamy {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Raised when a numerical routine cannot produce a trustworthy answer.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Eigenvalues in [-kEigenClamp, 0) are treated as zero in PSD routines.
inline constexpr double kEigenClamp = 1e-10;

class SubsystemLayout {
 public:
  explicit SubsystemLayout(std::vector<int> dims);

  const std::vector<int>& dims() const { return dims_; }
  int parties() const { return static_cast<int>(dims_.size()); }
  int dim(int k) const { return dims_.at(static_cast<std::size_t>(k)); }
  int total() const { return total_; }

  /// Layout of the listed subsystems, in the order given.
  SubsystemLayout select(std::span<const int> subsystems) const;

  /// Per-subsystem stride of a basis index.
  std::vector<int> strides() const;

  bool operator==(const SubsystemLayout&) const = default;

 private:
  std::vector<int> dims_;
  int total_ = 1;
};

class StateVector {
 public:
  /// Throws std::invalid_argument unless the amplitudes have unit norm
  /// (within 1e-12) and match the layout size.
  StateVector(CVector amplitudes, SubsystemLayout layout);

  /// Rescales arbitrary nonzero amplitudes to unit norm.
  static StateVector normalized(CVector amplitudes, SubsystemLayout layout);

  const CVector& amplitudes() const { return amplitudes_; }
  const SubsystemLayout& layout() const { return layout_; }
  cplx operator[](int index) const { return amplitudes_(index); }

 private:
  CVector amplitudes_;
  SubsystemLayout layout_;
};

class DensityOperator {
 public:
  /// Validates Hermiticity (1e-12), unit trace (1e-12) and eigenvalues
  /// >= -1e-10; the stored matrix is the Hermitian part of the input.
  DensityOperator(const CMatrix& matrix, SubsystemLayout layout);

  static DensityOperator from_pure(const StateVector& psi);

  const CMatrix& matrix() const { return matrix_; }
  const SubsystemLayout& layout() const { return layout_; }

 private:
  CMatrix matrix_;
  SubsystemLayout layout_;
};

struct Eigensystem {
  RVector values;   // descending
  CMatrix vectors;  // column k pairs with values(k)
};

CMatrix tensor_product(const CMatrix& a, const CMatrix& b);
CVector tensor_product(const CVector& a, const CVector& b);

/// Reduced state on `keep`; the result keeps the original subsystem order.
DensityOperator partial_trace(const DensityOperator& rho, std::span<const int> keep);
DensityOperator partial_trace(const StateVector& psi, std::span<const int> keep);

CMatrix partial_transpose(const DensityOperator& rho, int subsystem);
CMatrix partial_transpose(const CMatrix& m, const SubsystemLayout& layout,
                          std::span<const int> subsystems);

/// Reorders subsystems so that new subsystem k is old subsystem order[k].
CVector permute_subsystems(const CVector& v, const SubsystemLayout& layout,
                           std::span<const int> order);
CMatrix permute_subsystems(const CMatrix& m, const SubsystemLayout& layout,
                           std::span<const int> order);

double trace_norm(const CMatrix& m);

Eigensystem hermitian_eigensystem(const CMatrix& h);

/// Principal square root of a PSD matrix; throws std::domain_error on an
/// eigenvalue below -kEigenClamp.
CMatrix psd_sqrt(const CMatrix& rho);

/// Unitarily invariant random pure state (normalized complex Gaussian).
StateVector haar_random_pure(const SubsystemLayout& layout, std::uint64_t seed);

/// Haar unitary from the QR decomposition of a Ginibre matrix.
CMatrix haar_random_unitary(int dim, std::uint64_t seed);

/// The pure state behind rho when its top eigenvalue is within 1e-10 of 1.
std::optional<StateVector> pure_state_of(const DensityOperator& rho);

/// Largest absolute entry of m - m^dagger.
double hermiticity_error(const CMatrix& m);

}  // namespace polygamy
