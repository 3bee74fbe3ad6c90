#pragma once

// Verification pipelines behind the command-line subcommands. Each returns a
// Report sorted by (suite, check_id); all randomness derives from
// config.rng_seed.

#include "gaudin/bethe.hpp"
#include "gaudin/config.hpp"
#include "gaudin/report.hpp"
#include "gaudin/vertex_model.hpp"

#include <vector>

namespace gaudin {

// QYBE, unitarity, RE, dual RE, classical limit, transfer commutativity and
// the Gaudin-operator consistency suite. `r` replaces the R-matrix in the
// QYBE and unitarity suites.
Report run_check_algebra(const RunConfig& config, const RMatrixFn& r = {});

struct SolveOutput {
  Report report;
  std::vector<BetheRootSet> sets;  // kind one first, then kind two
  bool found_both_kinds = false;
};

SolveOutput run_solve_bethe(const RunConfig& config);

Report run_verify_eigen(const RunConfig& config, const std::vector<BetheRootSet>& sets);

Report run_verify_scalar(const RunConfig& config, const std::vector<BetheRootSet>& sets);

}  // namespace gaudin
