#pragma once

// Run configuration read from an INI-style file:
//
//   [run]         rng_seed
//   [model]       lambda1 lambda2 xi delta eta z (comma-separated list)
//   [tolerances]  see Tolerances
//   [solver]      seed starts max_iter max_imag
//   [checks]      draw counts and system sizes of the randomized suites
//   [suites]      one boolean per suite
//   [output]      report roots timing
//
// Model values are real. Unknown sections or keys raise ConfigError.

#include "gaudin/bethe.hpp"
#include "gaudin/numerics.hpp"
#include "gaudin/params.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gaudin {

struct Tolerances {
  double eps_degenerate = kDefaultEpsDegenerate;
  double tol_onshell = kDefaultTolOnShell;
  double tol_ba = 1e-11;
  double tol_identity = 1e-12;        // QYBE, unitarity, RE, dual RE
  double tol_transfer = 1e-11;        // relative [tau(u), tau(w)]
  double tol_slope = 0.1;             // |slope - 1| of the classical limit
  double tol_gaudin = 1e-5;           // direct vs transfer-derivative H_j
  double tol_commutator = 1e-9;
  double tol_eigen = 1e-8;
  double tol_partition = 1e-10;       // N <= 4
  double tol_partition_large = 1e-8;  // N >= 5
  double tol_scalar = 1e-8;
  double tol_intermediate = 1e-10;
  double control_factor = 1e3;        // required degradation of a negative control
  double fd_step = 1e-3;
  int fd_levels = 4;
  double fd_tolerance = 1e-6;

  RichardsonSettings richardson() const { return {fd_step, fd_levels, fd_tolerance}; }
};

struct SuiteFlags {
  bool qybe = true;
  bool unitarity = true;
  bool re = true;
  bool dual_re = true;
  bool classical_limit = true;
  bool transfer_commutativity = true;
  bool gaudin = true;
  bool bethe = true;
  bool eigen = true;
  bool partition = true;
  bool scalar_products = true;
  bool intermediate = true;

  bool any() const;
};

struct CheckSizes {
  int algebra_draws = 100;
  int classical_draws = 5;
  std::vector<int> transfer_sizes{2, 4, 6};
  std::vector<int> gaudin_sizes{2, 4, 6};
  int gaudin_draws = 5;
  std::vector<int> partition_sizes{1, 2, 3, 4, 6};
  int partition_draws = 5;
  int scalar_draws = 3;  // off-shell u draws per root set
};

struct OutputPaths {
  std::string report = "report.jsonl";
  std::string roots = "roots.json";
  bool timing = false;  // wall_time_ms in records breaks byte-identical reruns
};

struct RunConfig {
  std::uint64_t rng_seed = 20240611;
  ModelParams model = desk_instance();
  Tolerances tolerances;
  SolverSettings solver;
  SuiteFlags suites;
  CheckSizes checks;
  OutputPaths output;

  // Throws ConfigError: non-positive tolerances, odd N, no suite selected,
  // invalid model parameters.
  void validate() const;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

// The config as INI text; parse_config(to_ini(c)) reproduces c.
std::string to_ini(const RunConfig& config);

}  // namespace gaudin
