#pragma once

// Subcommands of the polygamy_lab command-line tool. Each command writes to
// the given stream and returns a process exit code.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polygamy/measures.hpp"
#include "polygamy/polygamy.hpp"
#include "polygamy/roof.hpp"

namespace polygamy::cli {

enum ExitCode : int {
  kOk = 0,
  kDataError = 1,
  kUsageError = 2,
  kViolation = 3,
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RoofOverrides {
  std::optional<int> restarts;
  std::optional<int> max_iters;
  std::optional<std::uint64_t> seed;

  RoofConfig apply(RoofConfig base = {}) const;
};

/// "0|1,2" or letters "A|BC" (A = subsystem 0). The union may omit
/// subsystems, which are then traced out.
struct CutSpec {
  std::vector<int> side_a;
  std::vector<int> side_b;
};

CutSpec parse_cut(const std::string& text);
std::string format_cut(const CutSpec& cut);

struct ExponentRange {
  double lo;
  double hi;
  double step;
  std::vector<double> grid() const;
};

/// "lo:hi:step", inclusive of hi.
ExponentRange parse_range(const std::string& text);

/// Comma-separated dimensions, e.g. "2,2,2".
std::vector<int> parse_layout(const std::string& text);

struct MeasureOptions {
  std::filesystem::path state;
  std::string measure;
  std::optional<std::string> cut;
  RoofOverrides roof;
};

struct VerifyOptions {
  std::optional<std::filesystem::path> state;
  std::string theorem;
  std::optional<double> exponent;
  std::optional<double> lemma_t;
  RoofOverrides roof;
};

struct SweepOptions {
  std::filesystem::path state;
  std::string theorem;
  std::string range;
  std::optional<std::filesystem::path> out;
  RoofOverrides roof;
};

struct FuzzOptions {
  int count = 0;
  std::string layout = "2,2,2";
  std::vector<std::string> theorems{"t1", "ckw", "dual-ckw"};
  std::vector<double> exponents{2.0};
  std::uint64_t seed = 1;
  std::optional<std::filesystem::path> out;
  int threads = 0;
  RoofOverrides roof;
};

struct ReproduceOptions {
  std::string id;
  RoofOverrides roof;
};

int cmd_measure(const MeasureOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err);
int cmd_fuzz(const FuzzOptions& opts, std::ostream& out, std::ostream& err);
int cmd_reproduce(const ReproduceOptions& opts, std::ostream& out, std::ostream& err);

/// One CSV row of a sweep.
struct SweepRow {
  double exponent;
  double lhs;
  double rhs;
  double residual;
  bool precondition_met;
};

inline constexpr const char* kSweepHeader = "exponent,lhs,rhs,residual,precondition_met";

std::string format_sweep_row(const SweepRow& row);

}  // namespace polygamy::cli
