#pragma once

// Six-vertex R-matrix, non-diagonal boundary K-matrices, one-row and
// double-row monodromy matrices, the open-chain transfer matrix, and residual
// checks of the Yang-Baxter and reflection equations.

#include "gaudin/params.hpp"
#include "gaudin/tensor.hpp"

#include <functional>
#include <optional>

namespace gaudin {

using RMatrixFn = std::function<Mat4(Complex u, Complex eta)>;

// 1 on the corners, [[sin u, sin eta], [sin eta, sin u]] / sin(u + eta) in
// the middle block. PoleError when |sin(u + eta)| < eps.
Mat4 r_matrix(Complex u, Complex eta, double eps = kDefaultEpsDegenerate);

// R_21(u) = P R_12(u) P.
Mat4 r_matrix_21(Complex u, Complex eta, double eps = kDefaultEpsDegenerate);

// Frobenius norm of R12 R13 R23 - R23 R13 R12 on C^2 (x) C^2 (x) C^2.
double check_qybe(Complex u1, Complex u2, Complex u3, Complex eta, const RMatrixFn& r = {});

// || R_12(u) R_21(-u) - I ||_F.
double check_unitarity(Complex u, Complex eta, const RMatrixFn& r = {});

// K^-(u). Independent of eta.
Mat2 k_minus(Complex u, const ModelParams& params);

// K^+(u) with the crossing parameter params.eta and xi_bar = xi + eta * delta,
// or with an explicitly supplied xi_bar.
Mat2 k_plus(Complex u, const ModelParams& params);
Mat2 k_plus(Complex u, const ModelParams& params, Complex xi_bar);

double check_re(Complex u1, Complex u2, const ModelParams& params);

// The dual RE holds for any xi_bar; pass one to decouple it from delta.
double check_dual_re(Complex u1, Complex u2, const ModelParams& params,
                     std::optional<Complex> xi_bar = std::nullopt);

// A 2x2 matrix in the auxiliary space with entries acting on (C^2)^{(x) N},
// stored as one (2 * 2^N)-square matrix with the auxiliary factor leftmost.
struct AuxOperator {
  Operator full;
  int n_sites = 0;

  Eigen::Index block_dim() const { return full.rows() / 2; }
  Operator block(int a, int b) const;  // a, b in {0, 1}
  Operator trace() const { return trace_auxiliary(full); }
};

// Multiply by a 2x2 auxiliary matrix on the left / right.
AuxOperator aux_left(const Mat2& k, const AuxOperator& x);
AuxOperator aux_right(const AuxOperator& x, const Mat2& k);

// T(u) = R_{0N}(u - z_N) ... R_{01}(u - z_1).
AuxOperator monodromy(Complex u, const ModelParams& params);

// R_{01}(u + z_1) ... R_{0N}(u + z_N), which equals T(-u)^{-1} by unitarity.
AuxOperator monodromy_hat_by_unitarity(Complex u, const ModelParams& params);

struct DoubleRowMonodromy {
  AuxOperator value;
  double condition = 1.0;  // 1-norm condition estimate of T(-u)
};

inline constexpr double kConditionWarning = 1e8;

// T(u) K^-(u) T(-u)^{-1}; T(-u) is inverted by LU with partial pivoting.
DoubleRowMonodromy double_row_monodromy(Complex u, const ModelParams& params);

// tau(u) = tr_0 K^+(u) T(u) K^-(u) T(-u)^{-1}.
Operator transfer(Complex u, const ModelParams& params);

}  // namespace gaudin
