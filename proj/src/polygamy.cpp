#include "polygamy/polygamy.hpp"

#include <cmath>
#include <stdexcept>

#include "polygamy/assistance.hpp"
#include "polygamy/measures.hpp"

namespace polygamy {

namespace {

std::vector<int> pair_keep(int b) { return {0, b}; }

void require_tripartite_or_more(int parties) {
  if (parties < 3) throw std::invalid_argument("polygamy check needs at least three subsystems");
}

const char* family_theorem(Family family, OrderingKind kind) {
  const bool split = kind == OrderingKind::split;
  switch (family) {
    case Family::tau:
      return split ? "t2" : "t3";
    case Family::eoa:
      return split ? "t4" : "t5";
    case Family::screnoa:
      return split ? "t6" : "t7";
  }
  return "";
}

}  // namespace

const char* to_string(OrderingKind kind) {
  switch (kind) {
    case OrderingKind::all_ascending:
      return "all-ascending";
    case OrderingKind::split:
      return "split";
    case OrderingKind::mirrored:
      return "mirrored";
    case OrderingKind::unsatisfied:
      return "unsatisfied";
  }
  return "?";
}

OrderingClassification classify_ordering(std::span<const double> values, bool squared,
                                          double tolerance) {
  const int n = static_cast<int>(values.size());
  if (n < 2) throw std::invalid_argument("classify_ordering: need at least two values");
  std::vector<double> q(values.size());
  for (int i = 0; i < n; ++i) {
    const double v = values[static_cast<std::size_t>(i)];
    if (!(v >= 0.0)) throw std::invalid_argument("classify_ordering: negative or NaN value");
    q[static_cast<std::size_t>(i)] = squared ? v * v : v;
  }
  std::vector<double> tail(values.size(), 0.0);
  for (int i = n - 2; i >= 0; --i)
    tail[static_cast<std::size_t>(i)] = tail[static_cast<std::size_t>(i + 1)] + q[static_cast<std::size_t>(i + 1)];
  auto at_most_tail = [&](int i) {
    return q[static_cast<std::size_t>(i)] <= tail[static_cast<std::size_t>(i)] + tolerance;
  };
  auto at_least_tail = [&](int i) {
    return q[static_cast<std::size_t>(i)] >= tail[static_cast<std::size_t>(i)] - tolerance;
  };

  OrderingClassification out;
  out.values.assign(values.begin(), values.end());
  out.squared = squared;
  out.tolerance = tolerance;

  bool ascending = true;
  for (int i = 0; i <= n - 2; ++i) ascending = ascending && at_most_tail(i);
  if (ascending) {
    out.kind = OrderingKind::all_ascending;
    return out;
  }
  if (n == 2) {
    out.kind = OrderingKind::mirrored;
    return out;
  }
  for (int m = 1; m <= n - 3; ++m) {
    bool ok = true;
    for (int i = 0; i <= m && ok; ++i) ok = at_most_tail(i);
    for (int j = m + 1; j <= n - 2 && ok; ++j) ok = at_least_tail(j);
    if (ok) {
      out.kind = OrderingKind::split;
      out.split_m = m;
      return out;
    }
  }
  out.kind = OrderingKind::unsatisfied;
  return out;
}

double lemma1_gap(double x, double t) {
  if (!(x >= 1.0) || !(t >= 1.0))
    throw std::domain_error("lemma1_gap: requires x >= 1 and t >= 1");
  return 1.0 + (std::pow(2.0, x) - 1.0) * std::pow(t, x) - std::pow(1.0 + t, x);
}

double split_rhs(std::span<const double> terms, double weight, int m) {
  const int n = static_cast<int>(terms.size());
  if (n < 2 || m < 0 || m > n - 2) throw std::invalid_argument("split_rhs: split index out of range");
  double rhs = 0.0;
  for (int j = 0; j <= m; ++j) rhs += std::pow(weight, j) * terms[static_cast<std::size_t>(j)];
  double middle = 0.0;
  for (int j = m + 1; j <= n - 2; ++j) middle += terms[static_cast<std::size_t>(j)];
  rhs += std::pow(weight, m + 2) * middle;
  rhs += std::pow(weight, m + 1) * terms[static_cast<std::size_t>(n - 1)];
  return rhs;
}

double weighted_rhs(std::span<const double> terms, double weight,
                    const OrderingClassification& classification) {
  const int n = static_cast<int>(terms.size());
  switch (classification.kind) {
    case OrderingKind::split:
      return split_rhs(terms, weight, *classification.split_m);
    case OrderingKind::mirrored:
      return terms[1] + weight * terms[0];
    case OrderingKind::all_ascending:
    case OrderingKind::unsatisfied:
      break;
  }
  double rhs = 0.0;
  for (int j = 0; j < n; ++j) rhs += std::pow(weight, j) * terms[static_cast<std::size_t>(j)];
  return rhs;
}

PolygamyInputs tau_inputs(const StateVector& psi) {
  const int parties = psi.layout().parties();
  require_tripartite_or_more(parties);
  PolygamyInputs in;
  in.family = Family::tau;
  in.whole = tau_a_pure(psi, Bipartition::first_vs_rest(parties));
  for (int b = 1; b < parties; ++b) in.pairs.push_back(tau_a(partial_trace(psi, pair_keep(b))));
  in.tolerance = kClosedFormTolerance;
  return in;
}

PolygamyInputs eoa_inputs(const DensityOperator& rho, const RoofConfig& config) {
  const int parties = rho.layout().parties();
  require_tripartite_or_more(parties);
  PolygamyInputs in;
  in.family = Family::eoa;
  const Bipartition cut = Bipartition::first_vs_rest(parties);
  if (const auto psi = pure_state_of(rho))
    in.whole = entanglement_entropy(*psi, cut);
  else
    in.whole = eoa(to_bipartite(rho, cut), config);
  for (int b = 1; b < parties; ++b) in.pairs.push_back(eoa(partial_trace(rho, pair_keep(b)), config));
  in.tolerance = kClosedFormTolerance + kRoofTolerance;
  return in;
}

PolygamyInputs screnoa_inputs(const DensityOperator& rho, const RoofConfig& config) {
  const int parties = rho.layout().parties();
  require_tripartite_or_more(parties);
  PolygamyInputs in;
  in.family = Family::screnoa;
  const Bipartition cut = Bipartition::first_vs_rest(parties);
  if (const auto psi = pure_state_of(rho))
    in.whole = scren_pure(*psi, cut);
  else
    in.whole = screnoa(to_bipartite(rho, cut), config);
  for (int b = 1; b < parties; ++b)
    in.pairs.push_back(screnoa(partial_trace(rho, pair_keep(b)), config));
  in.tolerance = kClosedFormTolerance + kRoofTolerance;
  return in;
}

PolygamyReport assess(const PolygamyInputs& inputs, double exponent) {
  const bool tau = inputs.family == Family::tau;
  if (tau && !(exponent >= 2.0)) throw std::domain_error("tau_a polygamy requires alpha >= 2");
  if (!tau && !(exponent >= 1.0)) throw std::domain_error("assistance polygamy requires beta >= 1");
  if (inputs.pairs.size() < 2) throw std::invalid_argument("assess: need at least two pairs");

  const double weight = tau ? std::pow(2.0, exponent / 2.0) - 1.0 : std::pow(2.0, exponent) - 1.0;
  std::vector<double> terms;
  for (double v : inputs.pairs) terms.push_back(std::pow(v, exponent));

  PolygamyReport r;
  r.exponent = exponent;
  r.tolerance = inputs.tolerance;
  r.classification = classify_ordering(inputs.pairs, tau, inputs.tolerance);
  r.lhs = std::pow(inputs.whole, exponent);

  const OrderingKind kind = r.classification.kind;
  if (inputs.pairs.size() == 2) {
    // Tripartite: the larger pair value takes the (weight) factor. Ties go
    // to branch (1), the AB >= AC case.
    const bool branch_one = inputs.pairs[0] >= inputs.pairs[1];
    r.theorem_id = tau ? "t1" : family_theorem(inputs.family, OrderingKind::all_ascending);
    r.form = branch_one ? "branch (1)" : "branch (2)";
    r.rhs = branch_one ? terms[1] + weight * terms[0] : terms[0] + weight * terms[1];
    r.precondition_met = true;
  } else {
    r.theorem_id = family_theorem(inputs.family, kind);
    r.form = to_string(kind);
    r.rhs = weighted_rhs(terms, weight, r.classification);
    r.precondition_met = kind == OrderingKind::all_ascending || kind == OrderingKind::split;
    if (!r.precondition_met)
      r.note = "ordering hypothesis unsatisfied; rhs shown in all-ascending form, no claim made";
  }
  if (inputs.family == Family::screnoa && kind == OrderingKind::all_ascending &&
      inputs.pairs.size() > 2)
    r.note = "all-ascending hypothesis evaluated on the SCRENoA values themselves";

  r.residual = r.rhs - r.lhs;
  r.holds = r.precondition_met && r.residual >= -r.tolerance;
  return r;
}

PolygamyReport check_tau_tripartite(const StateVector& psi, double alpha) {
  if (psi.layout().parties() != 3)
    throw std::invalid_argument("check_tau_tripartite: state must have three subsystems");
  if (!(alpha >= 2.0)) throw std::domain_error("check_tau_tripartite: alpha must be >= 2");
  return assess(tau_inputs(psi), alpha);
}

PolygamyReport check_tau_multi(const StateVector& psi, double alpha) {
  if (!(alpha >= 2.0)) throw std::domain_error("check_tau_multi: alpha must be >= 2");
  return assess(tau_inputs(psi), alpha);
}

PolygamyReport check_eoa_multi(const DensityOperator& rho, double beta, const RoofConfig& config) {
  if (!(beta >= 1.0)) throw std::domain_error("check_eoa_multi: beta must be >= 1");
  return assess(eoa_inputs(rho, config), beta);
}

PolygamyReport check_screnoa_multi(const DensityOperator& rho, double beta,
                                   const RoofConfig& config) {
  if (!(beta >= 1.0)) throw std::domain_error("check_screnoa_multi: beta must be >= 1");
  return assess(screnoa_inputs(rho, config), beta);
}

PolygamyReport check_tau_squared_sum(const StateVector& psi) {
  const PolygamyInputs in = tau_inputs(psi);
  PolygamyReport r;
  r.theorem_id = "eq8";
  r.form = "squared sum";
  r.exponent = 2.0;
  r.lhs = in.whole * in.whole;
  for (double v : in.pairs) r.rhs += v * v;
  r.classification = classify_ordering(in.pairs, true, in.tolerance);
  r.precondition_met = true;
  r.tolerance = in.tolerance;
  r.residual = r.rhs - r.lhs;
  r.holds = r.residual >= -r.tolerance;
  return r;
}

CkwGaps ckw_check(const StateVector& psi) {
  const SubsystemLayout& layout = psi.layout();
  for (int d : layout.dims())
    if (d != 2) throw std::invalid_argument("ckw_check: every subsystem must be a qubit");
  require_tripartite_or_more(layout.parties());
  const double c = concurrence_pure(psi, Bipartition::first_vs_rest(layout.parties()));
  double wootters_sq = 0.0;
  double assisted_sq = 0.0;
  for (int b = 1; b < layout.parties(); ++b) {
    const DensityOperator pair = partial_trace(psi, pair_keep(b));
    const double cw = wootters_concurrence_2q(pair);
    const double ca = concurrence_of_assistance(pair);
    wootters_sq += cw * cw;
    assisted_sq += ca * ca;
  }
  return {c * c - wootters_sq, assisted_sq - c * c};
}

}  // namespace polygamy
