#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>

#include "internal.hpp"
#include "polygamy/assistance.hpp"
#include "polygamy/measures.hpp"
#include "polygamy/parallel.hpp"

namespace polygamy::cli {

using detail::guarded;
using detail::Theorem;
using nlohmann::json;

namespace {

// State reduced to the subsystems named by the cut, with indices remapped.
struct Prepared {
  std::optional<StateVector> pure;
  DensityOperator rho;
  Bipartition cut;
};

Prepared prepare(const LoadedState& state, const CutSpec& spec) {
  const int parties = layout_of(state).parties();
  std::vector<int> keep = spec.side_a;
  keep.insert(keep.end(), spec.side_b.begin(), spec.side_b.end());
  std::sort(keep.begin(), keep.end());
  if (keep.back() >= parties)
    throw UsageError("cut names subsystem " + std::to_string(keep.back()) + " but the state has " +
                     std::to_string(parties));

  if (static_cast<int>(keep.size()) == parties) {
    const auto* psi = std::get_if<StateVector>(&state);
    return {psi ? std::optional<StateVector>(*psi) : std::nullopt, as_density(state),
            Bipartition(spec.side_a, spec.side_b)};
  }
  auto remap = [&](const std::vector<int>& side) {
    std::vector<int> out;
    for (int s : side)
      out.push_back(static_cast<int>(std::find(keep.begin(), keep.end(), s) - keep.begin()));
    return out;
  };
  DensityOperator reduced = std::visit(
      [&](const auto& s) { return partial_trace(s, keep); }, state);
  auto pure = pure_state_of(reduced);
  return {std::move(pure), std::move(reduced),
          Bipartition(remap(spec.side_a), remap(spec.side_b))};
}

json roof_json(const RoofResult& r, const RoofConfig& config) {
  json j;
  j["direction"] = config.direction == RoofDirection::maximize ? "maximize" : "minimize";
  j["restarts"] = config.restarts;
  j["max_iters"] = config.max_iters;
  j["seed"] = config.seed;
  j["ensemble_size"] = r.ensemble.members().size();
  j["best_restart"] = r.best_restart;
  j["best_restart_seed"] = r.best_restart_seed;
  j["converged"] = r.converged;
  return j;
}

struct MeasureValue {
  double value;
  std::string method;
  std::optional<json> roof;
};

MeasureValue roof_value(const DensityOperator& flat, const PureFunctional& f,
                        RoofConfig config, RoofDirection direction, bool square) {
  config.direction = direction;
  const RoofResult r = roof_optimize(flat, f, config);
  const char* method = direction == RoofDirection::maximize ? "roof-max" : "roof-min";
  return {square ? r.value * r.value : r.value, method, roof_json(r, config)};
}

MeasureValue evaluate_measure(const std::string& name, const Prepared& p,
                              const RoofConfig& config) {
  const Bipartition flat_cut({0}, {1});
  auto flat = [&] { return to_bipartite(p.rho, p.cut); };
  auto flat_is_2x2 = [&] { return flat().layout().dims() == std::vector<int>{2, 2}; };
  const PureFunctional conc = [&](const StateVector& s) { return concurrence_pure(s, flat_cut); };
  const PureFunctional neg = [&](const StateVector& s) { return negativity(s, flat_cut); };
  const PureFunctional ent = [&](const StateVector& s) {
    return entanglement_entropy(s, flat_cut);
  };

  if (name == "concurrence") {
    if (p.pure) return {concurrence_pure(*p.pure, p.cut), "closed-form", {}};
    if (flat_is_2x2()) return {wootters_concurrence_2q(flat()), "wootters", {}};
    return roof_value(flat(), conc, config, RoofDirection::minimize, false);
  }
  if (name == "ca") {
    if (p.pure) return {concurrence_pure(*p.pure, p.cut), "closed-form", {}};
    if (flat_is_2x2()) return {concurrence_of_assistance(flat()), "spectral", {}};
    return roof_value(flat(), conc, config, RoofDirection::maximize, false);
  }
  if (name == "tau_a") {
    if (p.pure) return {tau_a_pure(*p.pure, p.cut), "closed-form", {}};
    return {tau_a(flat()), "block-sum", {}};
  }
  if (name == "entropy") {
    if (!p.pure) throw std::invalid_argument("entropy needs a pure state on the cut subsystems");
    return {entanglement_entropy(*p.pure, p.cut), "closed-form", {}};
  }
  if (name == "eoa") {
    if (p.pure) return {entanglement_entropy(*p.pure, p.cut), "closed-form", {}};
    return roof_value(flat(), ent, config, RoofDirection::maximize, false);
  }
  if (name == "negativity") {
    if (p.pure) return {negativity(*p.pure, p.cut), "closed-form", {}};
    return {negativity(p.rho, p.cut), "partial-transpose", {}};
  }
  if (name == "scren") {
    if (p.pure) return {scren_pure(*p.pure, p.cut), "closed-form", {}};
    return roof_value(flat(), neg, config, RoofDirection::minimize, true);
  }
  if (name == "screnoa") {
    if (p.pure) return {scren_pure(*p.pure, p.cut), "closed-form", {}};
    return roof_value(flat(), neg, config, RoofDirection::maximize, true);
  }
  if (name == "wootters") {
    if (!flat_is_2x2()) throw std::invalid_argument("wootters needs two qubits across the cut");
    return {wootters_concurrence_2q(flat()), "wootters", {}};
  }
  throw UsageError("unknown measure '" + name + "'");
}

bool known_measure(const std::string& name) {
  static const char* names[] = {"concurrence", "ca",     "tau_a",   "entropy", "eoa",
                                "negativity",  "scren", "screnoa", "wootters"};
  return std::any_of(std::begin(names), std::end(names), [&](const char* n) { return name == n; });
}

CutSpec default_cut(int parties) {
  CutSpec cut{{0}, {}};
  for (int k = 1; k < parties; ++k) cut.side_b.push_back(k);
  return cut;
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over (seed, index)
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void check_exponent(Theorem t, double x) {
  const auto lo = detail::min_exponent(t);
  if (lo && !(x >= *lo))
    throw UsageError(std::string(detail::theorem_name(t)) + " needs an exponent >= " +
                     detail::format_double(*lo) + ", got " + detail::format_double(x));
}

}  // namespace

int cmd_measure(const MeasureOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!known_measure(opts.measure))
      throw UsageError("unknown measure '" + opts.measure +
                       "' (concurrence, ca, tau_a, entropy, eoa, negativity, scren, screnoa, "
                       "wootters)");
    const RoofConfig config = opts.roof.apply();
    const CutSpec cut_spec = opts.cut ? parse_cut(*opts.cut) : CutSpec{};
    const LoadedState state = read_state_file(opts.state);
    const CutSpec cut = opts.cut ? cut_spec : default_cut(layout_of(state).parties());
    if (!opts.cut && layout_of(state).parties() < 2)
      throw std::invalid_argument("state has a single subsystem; nothing to cut");
    const Prepared p = prepare(state, cut);
    const MeasureValue v = evaluate_measure(opts.measure, p, config);

    json j;
    j["measure"] = opts.measure;
    j["cut"] = format_cut(cut);
    j["state"] = std::holds_alternative<StateVector>(state) ? "pure" : "mixed";
    j["layout"] = layout_of(state).dims();
    j["value"] = v.value;
    j["method"] = v.method;
    if (v.roof) j["roof"] = *v.roof;
    out << j.dump(2) << "\n";
    return int{kOk};
  });
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Theorem t = detail::parse_theorem(opts.theorem);
    const RoofConfig config = opts.roof.apply();
    PolygamyReport report;
    if (t == Theorem::lemma1) {
      if (!opts.exponent) throw UsageError("lemma1 needs an exponent (--alpha or --beta)");
      if (!opts.lemma_t) throw UsageError("lemma1 needs --t");
      check_exponent(t, *opts.exponent);
      report = detail::lemma1_report(*opts.exponent, *opts.lemma_t);
    } else {
      if (detail::min_exponent(t)) {
        if (!opts.exponent)
          throw UsageError(opts.theorem + " needs an exponent (--alpha or --beta)");
        check_exponent(t, *opts.exponent);
      }
      if (!opts.state) throw UsageError(opts.theorem + " needs --state");
      const LoadedState state = read_state_file(*opts.state);
      report = detail::run_theorem(t, state, opts.exponent, config);
    }
    json j = detail::report_json(report);
    j["requested"] = opts.theorem;
    out << j.dump(2) << "\n";
    return detail::report_exit(report);
  });
}

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Theorem t = detail::parse_theorem(opts.theorem);
    if (!detail::sweepable(t))
      throw UsageError("sweep supports t1..t7, not '" + opts.theorem + "'");
    const ExponentRange range = parse_range(opts.range);
    check_exponent(t, range.lo);
    const RoofConfig config = opts.roof.apply();
    const LoadedState state = read_state_file(opts.state);
    const PolygamyInputs inputs = detail::theorem_inputs(t, state, config);

    std::ofstream file;
    if (opts.out) {
      file.open(*opts.out);
      if (!file) throw std::runtime_error("cannot write " + opts.out->string());
    }
    std::ostream& sink = opts.out ? static_cast<std::ostream&>(file) : out;
    sink << kSweepHeader << "\n";
    int code = kOk;
    for (double x : range.grid()) {
      const PolygamyReport r = assess(inputs, x);
      sink << format_sweep_row({x, r.lhs, r.rhs, r.residual, r.precondition_met}) << "\n";
      if (detail::report_exit(r) == kViolation) code = kViolation;
    }
    if (opts.out) out << "wrote " << opts.out->string() << "\n";
    return code;
  });
}

namespace {

struct FuzzCheck {
  Theorem theorem;
  std::optional<double> exponent;

  std::string label() const {
    std::string s = detail::theorem_name(theorem);
    if (exponent) {
      const bool tau = theorem == Theorem::t1 || theorem == Theorem::t2 || theorem == Theorem::t3;
      s += std::string(tau ? " alpha=" : " beta=") + detail::format_double(*exponent);
    }
    return s;
  }
};

enum class Outcome { pass, unsatisfied, violation };

struct FuzzResult {
  Outcome outcome;
  double residual;
};

}  // namespace

int cmd_fuzz(const FuzzOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.count < 1) throw UsageError("--count must be at least 1");
    const SubsystemLayout layout(parse_layout(opts.layout));
    if (opts.theorems.empty()) throw UsageError("--theorems is empty");
    RoofConfig config = opts.roof.apply();
    config.threads = 1;  // parallelism is across samples

    std::vector<FuzzCheck> checks;
    for (const auto& id : opts.theorems) {
      const Theorem t = detail::parse_theorem(id);
      if (t == Theorem::lemma1) throw UsageError("fuzz runs state checks; lemma1 takes no state");
      if (t == Theorem::t1 && layout.parties() != 3)
        throw UsageError("t1 needs a three-subsystem layout");
      if (layout.parties() < 3) throw UsageError(id + " needs at least three subsystems");
      if ((t == Theorem::ckw || t == Theorem::dual_ckw) &&
          std::any_of(layout.dims().begin(), layout.dims().end(), [](int d) { return d != 2; }))
        throw UsageError(id + " needs a qubit layout");
      if (detail::min_exponent(t)) {
        if (opts.exponents.empty()) throw UsageError("no exponents given");
        for (double x : opts.exponents) {
          check_exponent(t, x);
          checks.push_back({t, x});
        }
      } else {
        checks.push_back({t, std::nullopt});
      }
    }

    const auto n = static_cast<std::size_t>(opts.count);
    std::vector<std::vector<FuzzResult>> results(n);
    parallel_for(n, worker_count(opts.threads), [&](std::size_t i) {
      const LoadedState state = haar_random_pure(layout, sample_seed(opts.seed, i));
      for (const auto& c : checks) {
        const PolygamyReport r = detail::run_theorem(c.theorem, state, c.exponent, config);
        const Outcome o = !r.precondition_met ? Outcome::unsatisfied
                          : r.holds           ? Outcome::pass
                                              : Outcome::violation;
        results[i].push_back({o, r.residual});
      }
    });

    out << "fuzz: count=" << opts.count << " layout=" << opts.layout << " seed=" << opts.seed
        << "\n";
    for (std::size_t c = 0; c < checks.size(); ++c) {
      int pass = 0, unsatisfied = 0, violations = 0;
      double min_residual = std::numeric_limits<double>::infinity();
      for (const auto& row : results) {
        const FuzzResult& r = row[c];
        if (r.outcome == Outcome::pass) ++pass;
        if (r.outcome == Outcome::unsatisfied) ++unsatisfied;
        if (r.outcome == Outcome::violation) ++violations;
        if (r.outcome != Outcome::unsatisfied) min_residual = std::min(min_residual, r.residual);
      }
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.6e", min_residual);
      out << checks[c].label() << ": pass=" << pass << " unsatisfied=" << unsatisfied
          << " violations=" << violations << " min_residual=" << buf << "\n";
    }

    int total = 0;
    const std::filesystem::path dir = opts.out.value_or(".");
    for (std::size_t i = 0; i < n; ++i) {
      std::string failed;
      for (std::size_t c = 0; c < checks.size(); ++c)
        if (results[i][c].outcome == Outcome::violation)
          failed += (failed.empty() ? "" : ", ") + checks[c].label();
      if (failed.empty()) continue;
      ++total;
      std::filesystem::create_directories(dir);
      const auto path = dir / ("violation-seed" + std::to_string(opts.seed) + "-sample" +
                               std::to_string(i) + ".json");
      write_state_file(path, haar_random_pure(layout, sample_seed(opts.seed, i)));
      out << "violation: sample " << i << " (" << failed << ") -> " << path.string() << "\n";
    }
    out << "violations: " << total << "\n";
    return total > 0 ? int{kViolation} : int{kOk};
  });
}

}  // namespace polygamy::cli
