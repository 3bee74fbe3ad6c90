#pragma once

// Vacua, creation operators, Bethe states, both sets of Bethe equations with
// a multi-start Newton solver, and the eigenvalue formulas.

#include "gaudin/hamiltonians.hpp"
#include "gaudin/params.hpp"
#include "gaudin/tensor.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gaudin {

// Which vacuum / Bethe-equation set: kind one builds with B on |Omega^(1)>,
// kind two with C on |Omega^(2)>.
enum class Kind : int { one = 1, two = 2 };

inline int to_int(Kind k) { return static_cast<int>(k); }
Kind kind_from_int(int k);

// Product of per-site spinors (e^{-i(z_j + 2 lambda_k)}, 1).
StateVector vacuum(Kind kind, const ModelParams& params);

// Row vector; contract with `contract`, not with an inner product.
StateVector dual_vacuum(Kind kind, const ModelParams& params);

// row^T ket, no complex conjugation.
inline Complex contract(const StateVector& row, const StateVector& ket) {
  return row.transpose() * ket;
}

// <Omega^(k)|Omega^(k)> = prod_j e^{-2i(z_j + lambda1 + lambda2)} for either kind.
Complex vacuum_overlap(const ModelParams& params);

// Per-site coefficients multiplying sigma^-(z_i) in B(u) and sigma^+(z_i) in C(u).
Complex coeff_b(Complex u, Complex z_i, const ModelParams& params);
Complex coeff_c(Complex u, Complex z_i, const ModelParams& params);

// Gauged creation operators: sums of g(z_i) sigma^-+ g(z_i)^{-1} at each site.
LocalOperatorSum op_b(Complex u, const ModelParams& params);
LocalOperatorSum op_c(Complex u, const ModelParams& params);
// Same coefficients with bare sigma^-+_i.
LocalOperatorSum op_tilde_b(Complex u, const ModelParams& params);
LocalOperatorSum op_tilde_c(Complex u, const ModelParams& params);

struct BetheRootSet {
  Kind kind = Kind::one;
  std::vector<Complex> roots;
  double residual_norm = 0.0;  // max_alpha |residual_alpha|
  bool converged = false;
};

inline constexpr double kDefaultTolOnShell = 1e-10;

// Kind one: prod B(v_i) |Omega^(1)>; kind two: prod C(v_i) |Omega^(2)>.
StateVector bethe_state(Kind kind, const std::vector<Complex>& roots, const ModelParams& params);

// LHS - RHS of each equation. Weights (1 - delta, 1 + delta) on the lambda1 and
// lambda2 terms for kind one, swapped for kind two.
std::vector<Complex> ba_residual(Kind kind, const std::vector<Complex>& roots,
                                 const ModelParams& params);
double ba_residual_norm(Kind kind, const std::vector<Complex>& roots, const ModelParams& params);

// d residual_alpha / d v_beta, analytic.
Eigen::MatrixXcd ba_jacobian(Kind kind, const std::vector<Complex>& roots,
                             const ModelParams& params);

// Each equation multiplied by the product of all of its denominators. Same
// zeros away from poles, no poles, no spurious zeros at |Im v| -> infinity.
std::vector<Complex> ba_cleared(Kind kind, const std::vector<Complex>& roots,
                                const ModelParams& params);
Eigen::MatrixXcd ba_cleared_jacobian(Kind kind, const std::vector<Complex>& roots,
                                     const ModelParams& params);

struct SolverSettings {
  std::uint64_t seed = 20240611;
  int starts = 64;
  int max_iter = 200;
  int max_halvings = 20;
  double tol = kDefaultTolOnShell;
  double dedup_distance = 1e-6;
  double max_imag = 3.0;  // larger |Im v| are asymptotic artefacts
  double re_min = 0.05, re_max = 1.5;
  double im_min = -0.5, im_max = 0.5;
};

struct SolveDiagnostics {
  int starts = 0;
  int converged_starts = 0;
  int rejected_degenerate = 0;
  int rejected_imag = 0;
  int failed = 0;
  double best_residual = 0.0;  // smallest residual seen over all starts
};

struct SolveResult {
  std::vector<BetheRootSet> sets;  // deduplicated, canonical, sorted
  SolveDiagnostics diagnostics;
};

// Multi-start damped Newton: a phase on ba_cleared then a polish on ba_residual.
// An empty `sets` with diagnostics is returned when nothing converges.
SolveResult solve_bethe(Kind kind, const ModelParams& params, const SolverSettings& settings = {});

// `steps` full Newton steps on the raw equations, no damping.
BetheRootSet polish(Kind kind, std::vector<Complex> roots, const ModelParams& params, int steps = 2,
                    double tol = kDefaultTolOnShell);

// Canonical representative: Re reduced into [0, pi/2] using v -> v + pi and
// v -> -v, roots sorted by (Re, Im).
std::vector<Complex> canonical_roots(std::vector<Complex> roots);

// min over permutations and per-root symmetries of the max per-root distance.
double root_set_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

// How to read the boundary cot sum in the eigenvalue formula.
//   lambda_sum: cot(lambda1 + xi - z_j) + cot(lambda2 + xi - z_j)
//   literal:    cot(lambda1 + xi - z_1) + cot(lambda2 + xi - z_2)
enum class EigenvalueReading { lambda_sum, literal };

Complex eigenvalue(Kind kind, int site, const std::vector<Complex>& roots, const ModelParams& params,
                   EigenvalueReading reading = EigenvalueReading::lambda_sum);

struct EigenRecord {
  int site = 0;
  Kind kind = Kind::one;
  Complex value;            // closed-form E_j
  Complex rayleigh;         // <v|H_j|v> / <v|v>
  double eigen_residual = 0.0;     // ||H_j v - E_j v|| / ||v||
  double rayleigh_residual = 0.0;  // ||H_j v - rayleigh v|| / ||v||
  Complex shift;            // rayleigh - value: an identity offset if nonzero
};

std::vector<EigenRecord> eigen_check(Kind kind, const std::vector<Complex>& roots,
                                     const ModelParams& params,
                                     const RichardsonSettings& settings = {},
                                     EigenvalueReading reading = EigenvalueReading::lambda_sum);

std::string to_string(Kind kind);

}  // namespace gaudin
