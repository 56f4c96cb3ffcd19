#pragma once

// Optimization of ensemble averages over the pure-state decompositions of a
// density operator, in both the convex-roof (minimize) and assistance
// (maximize) directions.
//
// Every decomposition with K members arises from a K x r isometry V applied
// to the spectral decomposition: sqrt(p_i)|psi_i> = sum_j V_ij sqrt(l_j)|e_j>.
// The search walks over isometries with a derivative-free (1+1) strategy.

#include <cstdint>
#include <functional>
#include <vector>

#include "polygamy/linalg.hpp"
#include "polygamy/measures.hpp"

namespace polygamy {

/// Eigenvalues at or below this are treated as zero when detecting rank.
inline constexpr double kRankCutoff = 1e-10;
/// Members with smaller probability are dropped from an ensemble.
inline constexpr double kMemberDrop = 1e-12;

enum class RoofDirection { minimize, maximize };

struct RoofConfig {
  RoofDirection direction = RoofDirection::maximize;
  int ensemble_size = 0;  // 0 selects rank + 2, capped at rank^2
  int restarts = 32;
  int max_iters = 400;
  double step_tolerance = 1e-7;
  std::uint64_t seed = 20190101;
  int threads = 0;  // 0 defers to POLYGAMY_LAB_THREADS / hardware
};

struct EnsembleMember {
  double probability;
  StateVector state;
};

class Ensemble {
 public:
  /// Validates unit total probability (1e-10) and reconstruction of
  /// `source` (Frobenius 1e-8).
  Ensemble(std::vector<EnsembleMember> members, DensityOperator source);

  const std::vector<EnsembleMember>& members() const { return members_; }
  const DensityOperator& source() const { return source_; }

  CMatrix reconstruct() const;
  double reconstruction_error() const;

  template <typename Functional>
  double average(Functional&& f) const {
    double acc = 0.0;
    for (const auto& m : members_) acc += m.probability * f(m.state);
    return acc;
  }

 private:
  std::vector<EnsembleMember> members_;
  DensityOperator source_;
};

struct RoofResult {
  double value;
  Ensemble ensemble;
  bool converged;
  int restarts_used;
  int best_restart;
  std::uint64_t best_restart_seed;
};

using PureFunctional = std::function<double(const StateVector&)>;

/// Spectral data restricted to the numerical support of rho.
struct Support {
  RVector values;   // descending, all > kRankCutoff
  CMatrix vectors;  // total x rank
  int rank() const { return static_cast<int>(values.size()); }
};

/// Throws NumericError when an eigenvalue sits too close to the rank cutoff
/// to decide the rank.
Support support_of(const DensityOperator& rho);

Ensemble ensemble_from_isometry(const DensityOperator& rho, const CMatrix& v);

/// Ensemble size used for a given rank under `config`.
int resolved_ensemble_size(const RoofConfig& config, int rank);

RoofResult roof_optimize(const DensityOperator& rho, const PureFunctional& functional,
                         const RoofConfig& config);

/// Square of the minimal average negativity over decompositions.
double scren(const DensityOperator& rho, const Bipartition& cut, RoofConfig config);

}  // namespace polygamy
