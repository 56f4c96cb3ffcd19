// polygamy_lab: entanglement measures and polygamy checks on small states.

#include <iostream>

#include <CLI11.hpp>

#include "polygamy/cli.hpp"

namespace pc = polygamy::cli;

namespace {

void add_roof_flags(CLI::App* cmd, pc::RoofOverrides& roof) {
  cmd->add_option("--restarts", roof.restarts, "Optimizer restarts");
  cmd->add_option("--max-iters", roof.max_iters, "Optimizer iterations per restart");
  cmd->add_option("--seed", roof.seed, "Optimizer seed");
}

// --alpha and --beta name the same exponent; the theorem decides its domain.
void add_exponent_flags(CLI::App* cmd, std::optional<double>& exponent) {
  auto* alpha = cmd->add_option("--alpha", exponent, "Exponent for t1..t3 (and lemma1 x)");
  auto* beta = cmd->add_option("--beta", exponent, "Exponent for t4..t7 (and lemma1 x)");
  alpha->excludes(beta);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement measures and polygamy inequality checks"};
  app.require_subcommand(1);

  pc::MeasureOptions measure;
  auto* m = app.add_subcommand("measure", "Compute one measure of a state");
  m->add_option("--state", measure.state, "State file")->required();
  m->add_option("--measure", measure.measure,
                "concurrence, ca, tau_a, entropy, eoa, negativity, scren, screnoa, wootters")
      ->required();
  m->add_option("--cut", measure.cut, "Bipartition, e.g. 0|1,2 or A|BC (default A|rest)");
  add_roof_flags(m, measure.roof);

  pc::VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Check one inequality on a state");
  v->add_option("--state", verify.state, "State file");
  v->add_option("--theorem", verify.theorem, "lemma1, t1..t7, ckw, dual-ckw, eq8")->required();
  add_exponent_flags(v, verify.exponent);
  v->add_option("--t", verify.lemma_t, "t for lemma1");
  add_roof_flags(v, verify.roof);

  pc::SweepOptions sweep;
  auto* s = app.add_subcommand("sweep", "Residual as a function of the exponent, as CSV");
  s->add_option("--state", sweep.state, "State file")->required();
  s->add_option("--theorem", sweep.theorem, "t1..t7")->required();
  s->add_option("--range", sweep.range, "lo:hi:step")->required();
  s->add_option("--out", sweep.out, "CSV file (default stdout)");
  add_roof_flags(s, sweep.roof);

  pc::FuzzOptions fuzz;
  std::optional<std::uint64_t> fuzz_seed;
  auto* f = app.add_subcommand("fuzz", "Run checks on Haar-random pure states");
  f->add_option("--count", fuzz.count, "Number of samples")->required();
  f->add_option("--layout", fuzz.layout, "Subsystem dimensions")->capture_default_str();
  f->add_option("--theorems", fuzz.theorems, "Checks to run")->delimiter(',')
      ->capture_default_str();
  f->add_option("--exponents", fuzz.exponents, "Exponents for t1..t7")->delimiter(',')
      ->capture_default_str();
  f->add_option("--seed", fuzz_seed, "Sampling and optimizer seed");
  f->add_option("--threads", fuzz.threads, "Worker threads (0: POLYGAMY_LAB_THREADS or all)");
  f->add_option("--out", fuzz.out, "Directory for violation state files (default .)");
  f->add_option("--restarts", fuzz.roof.restarts, "Optimizer restarts");
  f->add_option("--max-iters", fuzz.roof.max_iters, "Optimizer iterations per restart");

  pc::ReproduceOptions reproduce;
  auto* r = app.add_subcommand("reproduce", "Compare computed values with reference values");
  r->add_option("id", reproduce.id, "ex1..ex4, fig1..fig3")->required();
  add_roof_flags(r, reproduce.roof);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return pc::kUsageError;
  }

  if (*m) return pc::cmd_measure(measure, std::cout, std::cerr);
  if (*v) return pc::cmd_verify(verify, std::cout, std::cerr);
  if (*s) return pc::cmd_sweep(sweep, std::cout, std::cerr);
  if (*f) {
    if (fuzz_seed) fuzz.seed = *fuzz_seed;
    return pc::cmd_fuzz(fuzz, std::cout, std::cerr);
  }
  return pc::cmd_reproduce(reproduce, std::cout, std::cerr);
}
