#pragma once

// Helpers shared by the command implementations.

#include <optional>
#include <string>

#include <json.hpp>

#include "polygamy/cli.hpp"
#include "polygamy/polygamy.hpp"
#include "polygamy/state_io.hpp"

namespace polygamy::cli::detail {

enum class Theorem { lemma1, t1, t2, t3, t4, t5, t6, t7, ckw, dual_ckw, eq8 };

/// Throws UsageError for an unknown id.
Theorem parse_theorem(const std::string& id);
const char* theorem_name(Theorem t);

/// Smallest admissible exponent, or nullopt for exponent-free checks.
std::optional<double> min_exponent(Theorem t);

/// True for t1..t7, the checks a sweep can run.
bool sweepable(Theorem t);

/// The pure state behind `state`; throws std::invalid_argument when mixed.
StateVector require_pure(const LoadedState& state, const char* what);

/// Exponent-independent inputs of t1..t7.
PolygamyInputs theorem_inputs(Theorem t, const LoadedState& state, const RoofConfig& config);

/// Full report for any state-based theorem (not lemma1).
PolygamyReport run_theorem(Theorem t, const LoadedState& state, std::optional<double> exponent,
                           const RoofConfig& config);

PolygamyReport lemma1_report(double x, double t);

nlohmann::json report_json(const PolygamyReport& r);

/// Exit code for a finished report: kViolation only when a satisfied
/// precondition meets a failed inequality.
int report_exit(const PolygamyReport& r);

/// Maps exceptions from `body` onto exit codes, printing the message.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  }
}

std::string format_double(double v, int digits = 12);

}  // namespace polygamy::cli::detail
