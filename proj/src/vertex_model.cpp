#include "gaudin/vertex_model.hpp"

#include "gaudin/errors.hpp"
#include "gaudin/log.hpp"
#include "gaudin/trig.hpp"

#include <Eigen/LU>

#include <limits>
#include <sstream>

namespace gaudin {

Mat4 r_matrix(Complex u, Complex eta, double eps) {
  const Complex denom = guarded_sin(u + eta, eps, "u + eta");
  const Complex a = std::sin(u) / denom;
  const Complex b = std::sin(eta) / denom;
  Mat4 r = Mat4::Zero();
  r(0, 0) = 1.0;
  r(1, 1) = a;
  r(1, 2) = b;
  r(2, 1) = b;
  r(2, 2) = a;
  r(3, 3) = 1.0;
  return r;
}

Mat4 r_matrix_21(Complex u, Complex eta, double eps) {
  const Mat4 p = swap_operator();
  return p * r_matrix(u, eta, eps) * p;
}

namespace {

Mat4 eval_r(const RMatrixFn& r, Complex u, Complex eta) {
  return r ? r(u, eta) : r_matrix(u, eta);
}

Eigen::Matrix<Complex, 8, 8> embed3(const Mat4& op, int a, int b) {
  Eigen::MatrixXcd m = embed_two_site(op, a, b, 3);
  return m;
}

Mat4 on_first(const Mat2& k) {
  Mat4 out = Mat4::Zero();
  out.topLeftCorner<2, 2>() = k(0, 0) * Mat2::Identity();
  out.topRightCorner<2, 2>() = k(0, 1) * Mat2::Identity();
  out.bottomLeftCorner<2, 2>() = k(1, 0) * Mat2::Identity();
  out.bottomRightCorner<2, 2>() = k(1, 1) * Mat2::Identity();
  return out;
}

Mat4 on_second(const Mat2& k) {
  Mat4 out = Mat4::Zero();
  out.topLeftCorner<2, 2>() = k;
  out.bottomRightCorner<2, 2>() = k;
  return out;
}

}  // namespace

double check_qybe(Complex u1, Complex u2, Complex u3, Complex eta, const RMatrixFn& r) {
  const auto r12 = embed3(eval_r(r, u1 - u2, eta), 1, 2);
  const auto r13 = embed3(eval_r(r, u1 - u3, eta), 1, 3);
  const auto r23 = embed3(eval_r(r, u2 - u3, eta), 2, 3);
  return (r12 * r13 * r23 - r23 * r13 * r12).norm();
}

double check_unitarity(Complex u, Complex eta, const RMatrixFn& r) {
  const Mat4 p = swap_operator();
  const Mat4 r21 = p * eval_r(r, -u, eta) * p;
  return (eval_r(r, u, eta) * r21 - Mat4::Identity()).norm();
}

Mat2 k_minus(Complex u, const ModelParams& params) {
  const Complex l1 = params.lambda1, l2 = params.lambda2, xi = params.xi;
  const double eps = params.eps_degenerate;
  const Complex den = 2.0 * guarded_sin(l1 + xi + u, eps, "lambda1 + xi + u") *
                      guarded_sin(l2 + xi + u, eps, "lambda2 + xi + u");
  const Complex cm = std::cos(l1 - l2);
  const Complex cp = std::cos(l1 + l2 + 2.0 * xi);
  const Complex e2 = std::exp(-2.0 * kI * u);
  const Complex s2 = std::sin(2.0 * u);
  Mat2 k;
  k(0, 0) = cm - cp * e2;
  k(0, 1) = -kI * s2 * std::exp(-kI * (l1 + l2)) * std::exp(-kI * u);
  k(1, 0) = kI * s2 * std::exp(kI * (l1 + l2)) * std::exp(-kI * u);
  k(1, 1) = cm * e2 - cp;
  return k / den;
}

Mat2 k_plus(Complex u, const ModelParams& params) { return k_plus(u, params, params.xi_bar()); }

Mat2 k_plus(Complex u, const ModelParams& params, Complex xi_bar) {
  const Complex l1 = params.lambda1, l2 = params.lambda2, eta = params.eta;
  const double eps = params.eps_degenerate;
  const Complex den = 2.0 * guarded_sin(l1 + xi_bar - u - eta, eps, "lambda1 + xi_bar - u - eta") *
                      guarded_sin(l2 + xi_bar - u - eta, eps, "lambda2 + xi_bar - u - eta");
  const Complex cm = std::cos(l1 - l2);
  const Complex cp = std::cos(l1 + l2 + 2.0 * xi_bar);
  const Complex s2 = std::sin(2.0 * u + 2.0 * eta);
  Mat2 k;
  k(0, 0) = cm * std::exp(-kI * eta) - cp * std::exp(2.0 * kI * u + kI * eta);
  k(0, 1) = kI * s2 * std::exp(-kI * (l1 + l2)) * std::exp(kI * u - kI * eta);
  k(1, 0) = -kI * s2 * std::exp(kI * (l1 + l2)) * std::exp(kI * u + kI * eta);
  k(1, 1) = cm * std::exp(2.0 * kI * u + kI * eta) - cp * std::exp(-kI * eta);
  return k / den;
}

double check_re(Complex u1, Complex u2, const ModelParams& params) {
  const Complex eta = params.eta;
  const double eps = params.eps_degenerate;
  const Mat4 k1 = on_first(k_minus(u1, params));
  const Mat4 k2 = on_second(k_minus(u2, params));
  const Mat4 lhs = r_matrix(u1 - u2, eta, eps) * k1 * r_matrix_21(u1 + u2, eta, eps) * k2;
  const Mat4 rhs = k2 * r_matrix(u1 + u2, eta, eps) * k1 * r_matrix_21(u1 - u2, eta, eps);
  return (lhs - rhs).norm();
}

double check_dual_re(Complex u1, Complex u2, const ModelParams& params,
                     std::optional<Complex> xi_bar) {
  const Complex eta = params.eta;
  const double eps = params.eps_degenerate;
  const Complex xb = xi_bar.value_or(params.xi_bar());
  const Mat4 k1 = on_first(k_plus(u1, params, xb));
  const Mat4 k2 = on_second(k_plus(u2, params, xb));
  const Complex s = -u1 - u2 - 2.0 * eta;
  const Mat4 lhs = r_matrix(u2 - u1, eta, eps) * k1 * r_matrix_21(s, eta, eps) * k2;
  const Mat4 rhs = k2 * r_matrix(s, eta, eps) * k1 * r_matrix_21(u2 - u1, eta, eps);
  return (lhs - rhs).norm();
}

Operator AuxOperator::block(int a, int b) const {
  const Eigen::Index d = block_dim();
  return full.block(a * d, b * d, d, d);
}

AuxOperator aux_left(const Mat2& k, const AuxOperator& x) {
  const Eigen::Index d = x.block_dim();
  AuxOperator out{Operator(x.full.rows(), x.full.cols()), x.n_sites};
  for (int a = 0; a < 2; ++a) {
    out.full.middleRows(a * d, d) = k(a, 0) * x.full.topRows(d) + k(a, 1) * x.full.bottomRows(d);
  }
  return out;
}

AuxOperator aux_right(const AuxOperator& x, const Mat2& k) {
  const Eigen::Index d = x.block_dim();
  AuxOperator out{Operator(x.full.rows(), x.full.cols()), x.n_sites};
  for (int b = 0; b < 2; ++b) {
    out.full.middleCols(b * d, d) = x.full.leftCols(d) * k(0, b) + x.full.rightCols(d) * k(1, b);
  }
  return out;
}

AuxOperator monodromy(Complex u, const ModelParams& params) {
  const int n = params.n_sites();
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(n + 1));
  AuxOperator t{Operator::Identity(dim, dim), n};
  // Left-multiplying R_{01}, then R_{02}, ... leaves R_{0N} leftmost.
  for (int j = 1; j <= n; ++j) {
    apply_two_site(r_matrix(u - params.z[j - 1], params.eta, params.eps_degenerate), 1, j + 1,
                   n + 1, t.full);
  }
  return t;
}

AuxOperator monodromy_hat_by_unitarity(Complex u, const ModelParams& params) {
  const int n = params.n_sites();
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(n + 1));
  AuxOperator t{Operator::Identity(dim, dim), n};
  for (int j = n; j >= 1; --j) {
    apply_two_site(r_matrix(u + params.z[j - 1], params.eta, params.eps_degenerate), 1, j + 1,
                   n + 1, t.full);
  }
  return t;
}

DoubleRowMonodromy double_row_monodromy(Complex u, const ModelParams& params) {
  const AuxOperator t_plus = monodromy(u, params);
  const AuxOperator t_minus = monodromy(-u, params);
  Eigen::PartialPivLU<Operator> lu(t_minus.full);
  const double rcond = lu.rcond();
  const double condition = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  if (!(condition < kConditionWarning)) {
    std::ostringstream msg;
    msg << "T(-u) ill-conditioned at u = " << u << " (condition estimate " << condition << ")";
    log_warning(msg.str());
  }
  AuxOperator hat{lu.inverse(), params.n_sites()};
  AuxOperator tk = aux_right(t_plus, k_minus(u, params));
  return {AuxOperator{tk.full * hat.full, params.n_sites()}, condition};
}

Operator transfer(Complex u, const ModelParams& params) {
  const DoubleRowMonodromy dr = double_row_monodromy(u, params);
  return aux_left(k_plus(u, params), dr.value).trace();
}

}  // namespace gaudin
