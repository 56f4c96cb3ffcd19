#pragma once

// Mechanical checks of the polygamy inequalities for powers of tau_a, E_a
// and SCRENoA, together with the elementary inequality they rest on:
//   (1 + t)^x <= 1 + (2^x - 1) t^x   for x >= 1, t >= 1.
//
// Subsystem 0 plays the role of A; subsystems 1..N play B_0..B_{N-1}.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polygamy/linalg.hpp"
#include "polygamy/roof.hpp"

namespace polygamy {

/// Residual slack for checks built purely from closed forms.
inline constexpr double kClosedFormTolerance = 1e-9;
/// Additional one-sided slack when a value comes out of the roof maximizer,
/// which can only undershoot.
inline constexpr double kRoofTolerance = 5e-3;

enum class OrderingKind {
  all_ascending,  // value_i <= sum_{k>i} value_k for every i <= N-2
  split,          // ascending up to m, descending from m+1 to N-2
  mirrored,       // two values with the first strictly larger
  unsatisfied,
};

const char* to_string(OrderingKind kind);

struct OrderingClassification {
  std::vector<double> values;
  std::optional<int> split_m;
  OrderingKind kind = OrderingKind::unsatisfied;
  bool squared = false;
  double tolerance = kClosedFormTolerance;
};

/// Comparisons are made on values^2 when `squared`, and accept ties within
/// `tolerance`. Split indices are searched in [1, N-3], smallest first.
OrderingClassification classify_ordering(std::span<const double> values, bool squared,
                                         double tolerance = kClosedFormTolerance);

/// 1 + (2^x - 1) t^x - (1 + t)^x; throws std::domain_error outside x, t >= 1.
double lemma1_gap(double x, double t);

/// sum_{j<=m} w^j t_j + w^{m+2} sum_{m<j<=N-2} t_j + w^{m+1} t_{N-1}.
/// With m = N-2 the middle block is empty and this is sum_j w^j t_j.
double split_rhs(std::span<const double> terms, double weight, int m);

/// Right-hand side for a classification; the all-ascending form is used as
/// an informational value when the ordering is unsatisfied.
double weighted_rhs(std::span<const double> terms, double weight,
                    const OrderingClassification& classification);

enum class Family { tau, eoa, screnoa };

/// The measure values a polygamy check consumes; independent of the
/// exponent, so sweeps compute them once.
struct PolygamyInputs {
  Family family = Family::tau;
  double whole = 0.0;         // A | B_0 ... B_{N-1}
  std::vector<double> pairs;  // A B_i
  double tolerance = kClosedFormTolerance;
};

struct PolygamyReport {
  std::string theorem_id;
  std::string form;
  double exponent = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  OrderingClassification classification;
  bool precondition_met = false;
  bool holds = false;
  double tolerance = kClosedFormTolerance;
  std::string note;
};

PolygamyInputs tau_inputs(const StateVector& psi);
PolygamyInputs eoa_inputs(const DensityOperator& rho, const RoofConfig& config);
PolygamyInputs screnoa_inputs(const DensityOperator& rho, const RoofConfig& config);

/// Evaluates the applicable inequality for `inputs` at `exponent`
/// (alpha >= 2 for tau, beta >= 1 otherwise; std::domain_error below).
PolygamyReport assess(const PolygamyInputs& inputs, double exponent);

PolygamyReport check_tau_tripartite(const StateVector& psi, double alpha);
PolygamyReport check_tau_multi(const StateVector& psi, double alpha);
PolygamyReport check_eoa_multi(const DensityOperator& rho, double beta, const RoofConfig& config);
PolygamyReport check_screnoa_multi(const DensityOperator& rho, double beta,
                                   const RoofConfig& config);

/// tau_a^2(A|rest) <= sum_i tau_a^2(A B_i).
PolygamyReport check_tau_squared_sum(const StateVector& psi);

struct CkwGaps {
  double monogamy_gap;  // C^2(A|rest) - sum_i C^2(rho_{A B_i})
  double dual_gap;      // sum_i C_a^2(rho_{A B_i}) - C^2(A|rest)
};

CkwGaps ckw_check(const StateVector& psi);

}  // namespace polygamy
