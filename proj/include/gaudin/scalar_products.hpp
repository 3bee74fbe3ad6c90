#pragma once

// Determinant representations of the partition functions and scalar
// products, the recursion for the partition function, the intermediate
// functions G^(i), and brute-force contractions used as oracles.

#include "gaudin/bethe.hpp"
#include "gaudin/params.hpp"
#include "gaudin/tensor.hpp"

#include <string>
#include <vector>

namespace gaudin {

enum class Method { determinant, bruteforce, recursion };

std::string to_string(Method m);

struct ScalarProductResult {
  Complex value;
  Method method = Method::determinant;
  double condition_estimate = 1.0;
};

// N^(k) with row alpha <-> ubar_alpha and column j <-> z_j.
Eigen::MatrixXcd partition_matrix(Kind kind, const std::vector<Complex>& ubar,
                                  const ModelParams& params);

// Z^(1) = <Up| prod C~(ubar) |Down>, Z^(2) = <Down| prod B~(ubar) |Up>.
// The determinant and recursion need ubar.size() == N.
ScalarProductResult partition_det(Kind kind, const std::vector<Complex>& ubar,
                                  const ModelParams& params);
// Peels the last ubar with the C~ (kind one) or B~ (kind two) coefficient of
// each remaining site; Z_0 = 1. Memoized over site subsets.
ScalarProductResult partition_recursive(Kind kind, const std::vector<Complex>& ubar,
                                        const ModelParams& params);
// Dense contraction; any list length is accepted (a length other than N gives 0).
ScalarProductResult partition_bruteforce(Kind kind, const std::vector<Complex>& ubar,
                                         const ModelParams& params);

// S^{1,2}(u; v) = Z^(1)(u ++ v), S^{2,1}(u; v) = Z^(2)(u ++ v).
ScalarProductResult s12(const std::vector<Complex>& u, const std::vector<Complex>& v,
                        const ModelParams& params);
ScalarProductResult s21(const std::vector<Complex>& u, const std::vector<Complex>& v,
                        const ModelParams& params);

// F^(k)_j(u; {z}, {v}) with j 1-based. The bracket's root sum skips v_j.
Complex f_factor(Kind kind, int j, Complex u, const std::vector<Complex>& roots,
                 const ModelParams& params);

// The matrix whose determinant gives S^{k,k}; row alpha <-> u_alpha, column j <-> v_j.
Eigen::MatrixXcd scalar_matrix(Kind kind, const std::vector<Complex>& u,
                               const std::vector<Complex>& roots, const ModelParams& params);

// `require` rejects roots whose Bethe residual is >= tol_onshell. `skip`
// evaluates the formula anyway, which negative controls need.
enum class ShellPolicy { require, skip };

ScalarProductResult s_kk_det(Kind kind, const std::vector<Complex>& u,
                             const std::vector<Complex>& roots, const ModelParams& params,
                             ShellPolicy policy = ShellPolicy::require,
                             double tol_onshell = kDefaultTolOnShell);

inline ScalarProductResult s11_det(const std::vector<Complex>& u, const std::vector<Complex>& roots,
                                   const ModelParams& params,
                                   ShellPolicy policy = ShellPolicy::require,
                                   double tol_onshell = kDefaultTolOnShell) {
  return s_kk_det(Kind::one, u, roots, params, policy, tol_onshell);
}
inline ScalarProductResult s22_det(const std::vector<Complex>& u, const std::vector<Complex>& roots,
                                   const ModelParams& params,
                                   ShellPolicy policy = ShellPolicy::require,
                                   double tol_onshell = kDefaultTolOnShell) {
  return s_kk_det(Kind::two, u, roots, params, policy, tol_onshell);
}

// Tilde form:  kind one <Up| prod C~(u) prod B~(v) |Up>,
//              kind two <Down| prod B~(u) prod C~(v) |Down>.
ScalarProductResult s_kk_bruteforce(Kind kind, const std::vector<Complex>& u,
                                    const std::vector<Complex>& roots, const ModelParams& params);

// Gauged form: <Omega^(k)| prod C(u) prod B(v) |Omega^(k)> for kind one, B and C
// exchanged for kind two. Equals vacuum_overlap(params) times the tilde form.
ScalarProductResult s_kk_bruteforce_gauged(Kind kind, const std::vector<Complex>& u,
                                           const std::vector<Complex>& roots,
                                           const ModelParams& params);

// G^(i)(u_1..u_i | j_{i+1}..j_M) = <j_{i+1}..j_M| C~(u_i)..C~(u_1) prod B~(v) |Up>,
// with the bra spin down exactly at `down_sites` (1-based, M - i of them).
Complex intermediate_g(const std::vector<Complex>& u_prefix, const std::vector<int>& down_sites,
                       const std::vector<Complex>& roots, const ModelParams& params);

// The same quantity through one step of the recursion: a sum over the site j
// flipped by C~(u_i), each weighted by <S|C~(u_i)|S + j> times G^(i-1).
Complex intermediate_g_recursive(const std::vector<Complex>& u_prefix,
                                 const std::vector<int>& down_sites,
                                 const std::vector<Complex>& roots, const ModelParams& params);

}  // namespace gaudin
