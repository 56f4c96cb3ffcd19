#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "internal.hpp"
#include "polygamy/measures.hpp"

namespace polygamy::cli {

namespace {

int parse_int(const std::string& token, const std::string& context) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size())
    throw UsageError(context + ": '" + token + "' is not an integer");
  return v;
}

double parse_double(const std::string& token, const std::string& context) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size() || !std::isfinite(v))
    throw UsageError(context + ": '" + token + "' is not a number");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<int> parse_side(const std::string& side) {
  if (side.empty()) throw UsageError("cut: empty side");
  std::vector<int> out;
  const bool letters = std::all_of(side.begin(), side.end(), [](char c) {
    return c >= 'A' && c <= 'Z';
  });
  if (letters) {
    for (char c : side) out.push_back(c - 'A');
  } else {
    for (const auto& tok : split(side, ',')) out.push_back(parse_int(tok, "cut"));
  }
  return out;
}

}  // namespace

RoofConfig RoofOverrides::apply(RoofConfig base) const {
  if (restarts) {
    if (*restarts < 1) throw UsageError("--restarts must be at least 1");
    base.restarts = *restarts;
  }
  if (max_iters) {
    if (*max_iters < 0) throw UsageError("--max-iters must be nonnegative");
    base.max_iters = *max_iters;
  }
  if (seed) base.seed = *seed;
  return base;
}

CutSpec parse_cut(const std::string& text) {
  const auto bar = text.find('|');
  if (bar == std::string::npos || text.find('|', bar + 1) != std::string::npos)
    throw UsageError("cut '" + text + "': expected exactly one '|'");
  CutSpec cut{parse_side(text.substr(0, bar)), parse_side(text.substr(bar + 1))};
  try {
    Bipartition check(cut.side_a, cut.side_b);
  } catch (const std::invalid_argument& e) {
    throw UsageError("cut '" + text + "': " + e.what());
  }
  return cut;
}

std::string format_cut(const CutSpec& cut) {
  auto side = [](const std::vector<int>& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out;
  };
  return side(cut.side_a) + "|" + side(cut.side_b);
}

std::vector<double> ExponentRange::grid() const {
  const double span = (hi - lo) / step;
  const auto n = static_cast<long>(std::floor(span + 1e-9));
  std::vector<double> out;
  for (long k = 0; k <= n; ++k) out.push_back(lo + static_cast<double>(k) * step);
  if (std::abs(out.back() - hi) <= 1e-9 * step) out.back() = hi;
  return out;
}

ExponentRange parse_range(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError("range '" + text + "': expected lo:hi:step");
  ExponentRange r{parse_double(parts[0], "range"), parse_double(parts[1], "range"),
                  parse_double(parts[2], "range")};
  if (!(r.step > 0.0)) throw UsageError("range '" + text + "': step must be positive");
  if (r.hi < r.lo) throw UsageError("range '" + text + "': hi is below lo");
  if ((r.hi - r.lo) / r.step > 1e6) throw UsageError("range '" + text + "': too many points");
  return r;
}

std::vector<int> parse_layout(const std::string& text) {
  std::vector<int> dims;
  for (const auto& tok : split(text, ',')) {
    const int d = parse_int(tok, "layout");
    if (d < 2) throw UsageError("layout: every dimension must be at least 2");
    dims.push_back(d);
  }
  if (dims.empty()) throw UsageError("layout: empty");
  return dims;
}

std::string format_sweep_row(const SweepRow& row) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,%s", row.exponent, row.lhs, row.rhs,
                row.residual, row.precondition_met ? "true" : "false");
  return buf;
}

namespace detail {

Theorem parse_theorem(const std::string& id) {
  static const std::pair<const char*, Theorem> table[] = {
      {"lemma1", Theorem::lemma1}, {"t1", Theorem::t1},     {"t2", Theorem::t2},
      {"t3", Theorem::t3},         {"t4", Theorem::t4},     {"t5", Theorem::t5},
      {"t6", Theorem::t6},         {"t7", Theorem::t7},     {"ckw", Theorem::ckw},
      {"dual-ckw", Theorem::dual_ckw}, {"eq8", Theorem::eq8},
  };
  for (const auto& [name, t] : table)
    if (id == name) return t;
  throw UsageError("unknown theorem '" + id + "' (lemma1, t1..t7, ckw, dual-ckw, eq8)");
}

const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::lemma1: return "lemma1";
    case Theorem::t1: return "t1";
    case Theorem::t2: return "t2";
    case Theorem::t3: return "t3";
    case Theorem::t4: return "t4";
    case Theorem::t5: return "t5";
    case Theorem::t6: return "t6";
    case Theorem::t7: return "t7";
    case Theorem::ckw: return "ckw";
    case Theorem::dual_ckw: return "dual-ckw";
    case Theorem::eq8: return "eq8";
  }
  return "?";
}

std::optional<double> min_exponent(Theorem t) {
  switch (t) {
    case Theorem::t1:
    case Theorem::t2:
    case Theorem::t3:
      return 2.0;
    case Theorem::lemma1:
    case Theorem::t4:
    case Theorem::t5:
    case Theorem::t6:
    case Theorem::t7:
      return 1.0;
    default:
      return std::nullopt;
  }
}

bool sweepable(Theorem t) {
  return t != Theorem::lemma1 && t != Theorem::ckw && t != Theorem::dual_ckw &&
         t != Theorem::eq8;
}

StateVector require_pure(const LoadedState& state, const char* what) {
  if (const auto* psi = std::get_if<StateVector>(&state)) return *psi;
  if (auto psi = pure_state_of(std::get<DensityOperator>(state))) return *psi;
  throw std::invalid_argument(std::string(what) + " needs a pure state");
}

PolygamyInputs theorem_inputs(Theorem t, const LoadedState& state, const RoofConfig& config) {
  switch (t) {
    case Theorem::t1: {
      const StateVector psi = require_pure(state, "t1");
      if (psi.layout().parties() != 3)
        throw std::invalid_argument("t1 needs a state with exactly three subsystems");
      return tau_inputs(psi);
    }
    case Theorem::t2:
    case Theorem::t3:
      return tau_inputs(require_pure(state, theorem_name(t)));
    case Theorem::t4:
    case Theorem::t5:
      return eoa_inputs(as_density(state), config);
    case Theorem::t6:
    case Theorem::t7:
      return screnoa_inputs(as_density(state), config);
    default:
      throw std::logic_error("theorem_inputs: not an exponent family");
  }
}

PolygamyReport lemma1_report(double x, double t) {
  if (!(t >= 1.0)) throw UsageError("lemma1 needs --t >= 1");
  PolygamyReport r;
  r.theorem_id = "lemma1";
  r.form = "(1+t)^x <= 1 + (2^x - 1) t^x";
  r.exponent = x;
  r.lhs = std::pow(1.0 + t, x);
  r.rhs = 1.0 + (std::pow(2.0, x) - 1.0) * std::pow(t, x);
  r.residual = lemma1_gap(x, t);
  r.precondition_met = true;
  r.tolerance = 1e-12 * std::max(1.0, r.rhs);
  r.holds = r.residual >= -r.tolerance;
  r.classification.kind = OrderingKind::all_ascending;
  r.note = "t = " + format_double(t);
  return r;
}

namespace {

PolygamyReport ckw_report(const StateVector& psi, bool dual) {
  const int n = psi.layout().parties();
  const double c = concurrence_pure(psi, Bipartition::first_vs_rest(n));
  const CkwGaps gaps = ckw_check(psi);
  PolygamyReport r;
  r.theorem_id = dual ? "dual-ckw" : "ckw";
  r.exponent = 2.0;
  r.precondition_met = true;
  r.tolerance = kClosedFormTolerance;
  if (dual) {
    r.form = "C^2(A|rest) <= sum_i C_a^2(A B_i)";
    r.lhs = c * c;
    r.residual = gaps.dual_gap;
    r.rhs = r.lhs + r.residual;
  } else {
    r.form = "sum_i C^2(A B_i) <= C^2(A|rest)";
    r.rhs = c * c;
    r.residual = gaps.monogamy_gap;
    r.lhs = r.rhs - r.residual;
  }
  r.classification.kind = OrderingKind::all_ascending;
  r.holds = r.residual >= -r.tolerance;
  return r;
}

}  // namespace

PolygamyReport run_theorem(Theorem t, const LoadedState& state, std::optional<double> exponent,
                           const RoofConfig& config) {
  switch (t) {
    case Theorem::ckw:
    case Theorem::dual_ckw:
      return ckw_report(require_pure(state, theorem_name(t)), t == Theorem::dual_ckw);
    case Theorem::eq8:
      return check_tau_squared_sum(require_pure(state, "eq8"));
    case Theorem::lemma1:
      throw std::logic_error("run_theorem: lemma1 takes no state");
    default:
      break;
  }
  if (!exponent) throw UsageError(std::string(theorem_name(t)) + " needs an exponent");
  return assess(theorem_inputs(t, state, config), *exponent);
}

nlohmann::json report_json(const PolygamyReport& r) {
  nlohmann::json cls;
  cls["kind"] = to_string(r.classification.kind);
  cls["values"] = r.classification.values;
  cls["squared"] = r.classification.squared;
  cls["split_m"] = r.classification.split_m ? nlohmann::json(*r.classification.split_m)
                                            : nlohmann::json(nullptr);
  nlohmann::json j;
  j["theorem"] = r.theorem_id;
  j["form"] = r.form;
  j["exponent"] = r.exponent;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["residual"] = r.residual;
  j["tolerance"] = r.tolerance;
  j["precondition_met"] = r.precondition_met;
  j["holds"] = r.holds;
  j["ordering"] = std::move(cls);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

int report_exit(const PolygamyReport& r) {
  return r.precondition_met && !r.holds ? kViolation : kOk;
}

std::string format_double(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

}  // namespace detail

}  // namespace polygamy::cli
