// Command-line entry point: check-algebra | solve-bethe | verify-eigen |
// verify-scalar | all. Exit codes: 0 all checks pass, 1 a check failed,
// 2 usage, configuration or roots-file error.

#include "gaudin/config.hpp"
#include "gaudin/errors.hpp"
#include "gaudin/pipelines.hpp"
#include "gaudin/roots_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string config_path;
  std::string roots_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  bool quiet = false;
  double corrupt_r = 0.0;
};

gaudin::RunConfig make_config(const Options& opt) {
  gaudin::RunConfig c = opt.config_path.empty() ? gaudin::RunConfig{} : gaudin::load_config(opt.config_path);
  if (opt.seed) {
    c.rng_seed = *opt.seed;
    c.solver.seed = *opt.seed;
  }
  if (!opt.roots_path.empty()) c.output.roots = opt.roots_path;
  if (!opt.out_path.empty()) c.output.report = opt.out_path;
  c.validate();
  return c;
}

gaudin::RMatrixFn corrupted_r(double amount) {
  if (amount == 0.0) return {};
  return [amount](gaudin::Complex u, gaudin::Complex eta) {
    gaudin::Mat4 r = gaudin::r_matrix(u, eta);
    r(1, 1) += amount;
    return r;
  };
}

std::vector<gaudin::BetheRootSet> load_roots(const gaudin::RunConfig& c) {
  const gaudin::RootsFile file = gaudin::read_roots(c.output.roots);
  if (!file.sets.empty() && file.params_hash != c.model.hash_hex()) {
    throw gaudin::ConfigError("roots file " + c.output.roots + " was written for params " +
                              file.params_hash + ", config has " + c.model.hash_hex());
  }
  return file.sets;
}

void print_roots(const std::vector<gaudin::BetheRootSet>& sets) {
  std::printf("kind  set  residual    roots\n");
  int index = 0;
  gaudin::Kind last = gaudin::Kind::one;
  for (const auto& s : sets) {
    if (s.kind != last) index = 0;
    last = s.kind;
    std::printf("%4d  %3d  %.3e ", gaudin::to_int(s.kind), index++, s.residual_norm);
    for (const auto r : s.roots) std::printf(" (%.15f, %+.3e)", r.real(), r.imag());
    std::printf("\n");
  }
}

int finish(const gaudin::Report& report, const gaudin::RunConfig& c, const Options& opt,
           bool extra_failure = false) {
  report.append_to_file(c.output.report);
  if (!opt.quiet) report.print_summary(std::cout);
  return report.all_pass() && !extra_failure ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification tool for the open XXZ Gaudin model with non-diagonal boundaries"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--config", opt.config_path, "INI configuration file");
  app.add_option("--roots", opt.roots_path, "Roots file (JSON); overrides [output] roots");
  app.add_option("--out", opt.out_path, "Report file (JSON lines, appended); overrides [output] report");
  app.add_option("--seed", opt.seed, "Overrides [run] rng_seed and [solver] seed");
  app.add_flag("--quiet", opt.quiet, "Suppress the human-readable summary");
  app.add_option("--corrupt-r", opt.corrupt_r)->group("");

  auto* algebra = app.add_subcommand("check-algebra", "Yang-Baxter, reflection, transfer and Gaudin-operator identities");
  auto* solve = app.add_subcommand("solve-bethe", "Solve both Bethe-equation sets and write the roots file");
  auto* eigen = app.add_subcommand("verify-eigen", "Check Bethe states against every Gaudin operator");
  auto* scalar = app.add_subcommand("verify-scalar", "Partition-function and scalar-product determinants against oracles");
  auto* all = app.add_subcommand("all", "Every suite in sequence");
  for (auto* sub : {algebra, solve, eigen, scalar, all}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kExitPass;
  try {
    const gaudin::RunConfig c = make_config(opt);
    if (algebra->parsed()) {
      code = finish(gaudin::run_check_algebra(c, corrupted_r(opt.corrupt_r)), c, opt);
    } else if (solve->parsed()) {
      const gaudin::SolveOutput out = gaudin::run_solve_bethe(c);
      gaudin::write_roots(c.output.roots, out.sets, c.model);
      if (!opt.quiet) print_roots(out.sets);
      code = finish(out.report, c, opt, !out.found_both_kinds);
    } else if (eigen->parsed()) {
      code = finish(gaudin::run_verify_eigen(c, load_roots(c)), c, opt);
    } else if (scalar->parsed()) {
      code = finish(gaudin::run_verify_scalar(c, load_roots(c)), c, opt);
    } else if (all->parsed()) {
      gaudin::Report report = gaudin::run_check_algebra(c, corrupted_r(opt.corrupt_r));
      const gaudin::SolveOutput out = gaudin::run_solve_bethe(c);
      gaudin::write_roots(c.output.roots, out.sets, c.model);
      report.append(out.report);
      report.append(gaudin::run_verify_eigen(c, out.sets));
      report.append(gaudin::run_verify_scalar(c, out.sets));
      if (!opt.quiet) print_roots(out.sets);
      code = finish(report, c, opt, !out.found_both_kinds);
    }
  } catch (const gaudin::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const gaudin::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  if (!opt.quiet) {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("elapsed %.2f s, exit %d\n", secs, code);
  }
  return code;
}
