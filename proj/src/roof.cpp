#include "polygamy/roof.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "polygamy/parallel.hpp"
#include "polygamy/random.hpp"

namespace polygamy {

namespace {

constexpr double kInitialStep = 0.3;
constexpr double kMaxStep = 2.0;
constexpr double kGrow = 1.5;
constexpr double kShrink = 0.9;

std::uint64_t restart_seed(std::uint64_t seed, int restart) {
  return seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(restart);
}

// Closest isometry to x (polar factor).
CMatrix polar_isometry(const CMatrix& x) {
  Eigen::JacobiSVD<CMatrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

// Columns are sqrt(p_i)|psi_i> for the isometry v.
CMatrix weighted_members(const CMatrix& scaled_support, const CMatrix& v) {
  return scaled_support * v.transpose();
}

class Objective {
 public:
  Objective(const Support& support, SubsystemLayout layout, const PureFunctional& f)
      : scaled_(support.vectors * support.values.cwiseSqrt().asDiagonal()),
        layout_(std::move(layout)),
        f_(f) {}

  double operator()(const CMatrix& v) const {
    const CMatrix w = weighted_members(scaled_, v);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < w.cols(); ++i) {
      const double p = w.col(i).squaredNorm();
      if (p < kMemberDrop) continue;
      acc += p * f_(StateVector(w.col(i) / std::sqrt(p), layout_));
    }
    return acc;
  }

 private:
  CMatrix scaled_;
  SubsystemLayout layout_;
  const PureFunctional& f_;
};

struct RestartOutcome {
  double value = 0.0;
  CMatrix isometry;
  bool converged = false;
};

RestartOutcome run_restart(const Objective& objective, int restart, int ensemble_size, int rank,
                           const RoofConfig& config) {
  Rng rng = make_rng(restart_seed(config.seed, restart));
  const double sign = config.direction == RoofDirection::maximize ? 1.0 : -1.0;

  RestartOutcome out;
  if (restart == 0) {
    // The spectral decomposition, padded with null members.
    out.isometry = CMatrix::Identity(ensemble_size, rank);
  } else {
    out.isometry = polar_isometry(complex_gaussian(rng, ensemble_size, rank));
  }
  double best = sign * objective(out.isometry);

  double step = kInitialStep;
  for (int it = 0; it < config.max_iters; ++it) {
    const CMatrix trial =
        polar_isometry(out.isometry + step * complex_gaussian(rng, ensemble_size, rank));
    const double value = sign * objective(trial);
    if (value > best) {
      best = value;
      out.isometry = trial;
      step = std::min(step * kGrow, kMaxStep);
    } else {
      step *= kShrink;
    }
    if (step < config.step_tolerance) {
      out.converged = true;
      break;
    }
  }
  out.value = sign * best;
  return out;
}

void validate(const RoofConfig& config) {
  if (config.restarts < 1) throw std::invalid_argument("RoofConfig: restarts must be >= 1");
  if (config.max_iters < 0) throw std::invalid_argument("RoofConfig: max_iters must be >= 0");
  if (!(config.step_tolerance > 0.0))
    throw std::invalid_argument("RoofConfig: step_tolerance must be positive");
}

}  // namespace

Ensemble::Ensemble(std::vector<EnsembleMember> members, DensityOperator source)
    : members_(std::move(members)), source_(std::move(source)) {
  double total = 0.0;
  for (const auto& m : members_) {
    if (!(m.probability > 0.0) || m.probability > 1.0 + 1e-10)
      throw std::invalid_argument("Ensemble: probability outside (0, 1]");
    if (!(m.state.layout() == source_.layout()))
      throw std::invalid_argument("Ensemble: member layout differs from source");
    total += m.probability;
  }
  if (std::abs(total - 1.0) > 1e-10)
    throw std::invalid_argument("Ensemble: probabilities do not sum to 1");
  if (reconstruction_error() > 1e-8)
    throw std::invalid_argument("Ensemble: members do not reconstruct the source");
}

CMatrix Ensemble::reconstruct() const {
  const int n = source_.layout().total();
  CMatrix out = CMatrix::Zero(n, n);
  for (const auto& m : members_)
    out += m.probability * m.state.amplitudes() * m.state.amplitudes().adjoint();
  return out;
}

double Ensemble::reconstruction_error() const {
  return (reconstruct() - source_.matrix()).norm();
}

Support support_of(const DensityOperator& rho) {
  const Eigensystem es = hermitian_eigensystem(rho.matrix());
  int rank = 0;
  for (Eigen::Index k = 0; k < es.values.size(); ++k) {
    const double lambda = es.values(k);
    if (!std::isfinite(lambda)) throw NumericError("support_of: non-finite eigenvalue");
    if (lambda > kRankCutoff && lambda <= 10.0 * kRankCutoff)
      throw NumericError("support_of: eigenvalue " + std::to_string(lambda) +
                         " is too close to the rank cutoff");
    if (lambda > kRankCutoff) ++rank;
  }
  if (rank == 0) throw NumericError("support_of: no eigenvalue above the rank cutoff");
  Support s;
  s.values = es.values.head(rank);
  s.vectors = es.vectors.leftCols(rank);
  return s;
}

Ensemble ensemble_from_isometry(const DensityOperator& rho, const CMatrix& v) {
  const Support support = support_of(rho);
  if (v.cols() != support.rank())
    throw std::invalid_argument("ensemble_from_isometry: isometry has " +
                                std::to_string(v.cols()) + " columns, rank is " +
                                std::to_string(support.rank()));
  if (v.rows() < v.cols())
    throw std::invalid_argument("ensemble_from_isometry: fewer members than rank");
  const CMatrix gram = v.adjoint() * v;
  if ((gram - CMatrix::Identity(v.cols(), v.cols())).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("ensemble_from_isometry: columns are not orthonormal");

  const CMatrix scaled = support.vectors * support.values.cwiseSqrt().asDiagonal();
  const CMatrix w = weighted_members(scaled, v);
  std::vector<EnsembleMember> members;
  double kept = 0.0;
  for (Eigen::Index i = 0; i < w.cols(); ++i) {
    const double p = w.col(i).squaredNorm();
    if (p < kMemberDrop) continue;
    members.push_back({p, StateVector(w.col(i) / std::sqrt(p), rho.layout())});
    kept += p;
  }
  // Renormalize away the sub-threshold eigenvalues and dropped members.
  for (auto& m : members) m.probability /= kept;
  return Ensemble(std::move(members), rho);
}

int resolved_ensemble_size(const RoofConfig& config, int rank) {
  const int cap = rank * rank;
  if (config.ensemble_size == 0) return std::min(rank + 2, cap);
  if (config.ensemble_size < rank)
    throw std::invalid_argument("RoofConfig: ensemble_size below rank " + std::to_string(rank));
  if (config.ensemble_size > cap)
    throw std::invalid_argument("RoofConfig: ensemble_size above rank^2 = " + std::to_string(cap));
  return config.ensemble_size;
}

RoofResult roof_optimize(const DensityOperator& rho, const PureFunctional& functional,
                         const RoofConfig& config) {
  validate(config);
  const Support support = support_of(rho);
  const int rank = support.rank();
  const int ensemble_size = resolved_ensemble_size(config, rank);

  if (rank == 1) {
    Ensemble ensemble = ensemble_from_isometry(rho, CMatrix::Identity(1, 1));
    const double value = ensemble.average(functional);
    return RoofResult{value, std::move(ensemble), true, 1, 0, restart_seed(config.seed, 0)};
  }

  const Objective objective(support, rho.layout(), functional);
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(config.restarts));
  parallel_for(outcomes.size(), worker_count(config.threads), [&](std::size_t r) {
    outcomes[r] = run_restart(objective, static_cast<int>(r), ensemble_size, rank, config);
  });

  // Strict comparison keeps the lowest restart index on ties.
  const bool maximize = config.direction == RoofDirection::maximize;
  std::size_t best = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r) {
    const bool better = maximize ? outcomes[r].value > outcomes[best].value
                                 : outcomes[r].value < outcomes[best].value;
    if (better) best = r;
  }

  Ensemble ensemble = ensemble_from_isometry(rho, outcomes[best].isometry);
  const double value = ensemble.average(functional);
  return RoofResult{value,
                    std::move(ensemble),
                    outcomes[best].converged,
                    config.restarts,
                    static_cast<int>(best),
                    restart_seed(config.seed, static_cast<int>(best))};
}

double scren(const DensityOperator& rho, const Bipartition& cut, RoofConfig config) {
  cut.require_covers(rho.layout().parties());
  config.direction = RoofDirection::minimize;
  const RoofResult r = roof_optimize(
      rho, [&cut](const StateVector& psi) { return negativity(psi, cut); }, config);
  return r.value * r.value;
}

}  // namespace polygamy
