#include "../oracles.hpp"

#include "gaudin/errors.hpp"
#include "gaudin/numerics.hpp"
#include "gaudin/params.hpp"
#include "gaudin/vertex_model.hpp"

#include <doctest.h>

#include <random>

using namespace gaudin;

namespace {

ModelParams params_n(int n) {
  ModelParams p = desk_instance();
  const std::vector<Complex> z{0.11, 0.23, 0.41, 0.62, 0.87, 1.03};
  p.z.assign(z.begin(), z.begin() + n);
  return p;
}

// Identity residuals are absolute, so draws keep every denominator at least
// this far from zero, as the algebra suite does.
constexpr double kMargin = 0.2;

bool clear(std::initializer_list<Complex> args) {
  for (const Complex a : args)
    if (std::abs(std::sin(a)) < kMargin) return false;
  return true;
}

double commutator(const Operator& a, const Operator& b) {
  return (a * b - b * a).norm() / (a.norm() * b.norm());
}

}  // namespace

TEST_SUITE("vertex_model") {

TEST_CASE("R at zero is the permutation") {
  CHECK((r_matrix(0.0, 0.1) - swap_operator()).norm() < 1e-15);
}

TEST_CASE("R tends to the identity as eta vanishes") {
  CHECK((r_matrix(0.7, 1e-8) - Mat4::Identity()).norm() < 1e-7);
}

TEST_CASE("unitarity, QYBE, RE and dual RE at random points") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> d(0.1, 1.3);
  const ModelParams p = desk_instance();
  const Complex eta = p.eta, l1 = p.lambda1 + p.xi, l2 = p.lambda2 + p.xi;
  const Complex b1 = p.lambda1 + p.xi_bar() - eta, b2 = p.lambda2 + p.xi_bar() - eta;
  int qybe = 0, re = 0;
  while (qybe < 20 || re < 20) {
    const Complex u1 = d(rng), u2 = d(rng), u3 = d(rng), e = d(rng);
    if (qybe < 20 && clear({u1 - u2 + e, u1 - u3 + e, u2 - u3 + e, u1 + e, -u1 + e})) {
      CHECK(check_unitarity(u1, e) < 1e-12);
      CHECK(check_qybe(u1, u2, u3, e) < 1e-12);
      ++qybe;
    }
    if (re < 20 && clear({u1 - u2 + eta, u1 + u2 + eta, u2 - u1 + eta, -u1 - u2 - eta, l1 + u1, l2 + u1,
                          l1 + u2, l2 + u2, b1 - u1, b2 - u1, b1 - u2, b2 - u2})) {
      CHECK(check_re(u1, u2, p) < 1e-12);
      CHECK(check_dual_re(u1, u2, p) < 1e-12);
      ++re;
    }
  }
}

TEST_CASE("coincident arguments") {
  const ModelParams p = desk_instance();
  CHECK(check_qybe(0.4, 0.4, 0.9, 0.3) < 1e-12);
  CHECK(check_re(0.6, 0.6, p) < 1e-12);
}

TEST_CASE("a corrupted R entry breaks QYBE") {
  const RMatrixFn bad = [](Complex u, Complex eta) {
    Mat4 r = r_matrix(u, eta);
    r(1, 1) += 1e-3;
    return r;
  };
  CHECK(check_qybe(0.3, 0.8, 1.1, 0.2, bad) > 1e-5);
}

TEST_CASE("dual RE holds for any xi_bar") {
  const ModelParams p = desk_instance();
  CHECK(check_dual_re(0.35, 0.9, p, p.xi_bar() + 0.137) < 1e-12);
}

TEST_CASE("K- is the identity at zero and 2 pi periodic") {
  const ModelParams p = desk_instance();
  CHECK((k_minus(0.0, p) - Mat2::Identity()).norm() < 1e-15);
  const Complex u{0.43, 0.21};
  CHECK((k_minus(u, p) - k_minus(u + 2.0 * M_PI, p)).norm() < 1e-12);
}

TEST_CASE("K+ K- approaches the identity linearly in eta") {
  const ModelParams p = desk_instance();
  const Complex u = 0.37;
  std::vector<double> logs_eta, logs_dev;
  for (double eta : {1e-2, 1e-3, 1e-4}) {
    const ModelParams q = p.with_eta(eta);
    const double dev = (k_plus(u, q) * k_minus(u, q) - Mat2::Identity()).norm();
    logs_eta.push_back(std::log(eta));
    logs_dev.push_back(std::log(dev));
  }
  const double slope01 = (logs_dev[1] - logs_dev[0]) / (logs_eta[1] - logs_eta[0]);
  const double slope12 = (logs_dev[2] - logs_dev[1]) / (logs_eta[2] - logs_eta[1]);
  CHECK(std::abs(slope01 - 1.0) < 0.1);
  CHECK(std::abs(slope12 - 1.0) < 0.1);
}

TEST_CASE("K+ is regular at a generic point") {
  const Mat2 k = k_plus(0.52, desk_instance());
  CHECK(k.allFinite());
  CHECK(std::abs(k.determinant()) > 1e-6);
}

TEST_CASE("K matrices guard their poles") {
  ModelParams p = desk_instance();
  // sin(lambda1 + xi + u) = 0
  CHECK_THROWS_AS(k_minus(-(p.lambda1 + p.xi), p), PoleError);
}

TEST_CASE("monodromy tends to the identity and has 2^N blocks") {
  const ModelParams p = params_n(3).with_eta(1e-9);
  const AuxOperator t = monodromy(0.77, p);
  CHECK(t.block_dim() == 8);
  CHECK((t.full - Operator::Identity(16, 16)).norm() < 1e-7);
}

TEST_CASE("the unitarity product equals the explicit inverse of T(-u)") {
  const ModelParams p = params_n(3);
  const Complex u{0.77, 0.05};
  const Operator inv = monodromy(-u, p).full.fullPivLu().inverse();
  CHECK(rel_error(monodromy_hat_by_unitarity(u, p).full, inv) < 1e-12);
  CHECK((monodromy(-u, p).full * monodromy_hat_by_unitarity(u, p).full - Operator::Identity(16, 16)).norm() < 1e-12);
}

TEST_CASE("double-row monodromy tends to K- on the auxiliary space") {
  const ModelParams p = params_n(2).with_eta(1e-9);
  const Complex u = 0.66;
  const DoubleRowMonodromy dr = double_row_monodromy(u, p);
  CHECK(dr.value.block_dim() == 4);
  CHECK((dr.value.full - oracle::kron(k_minus(u, p), Operator::Identity(4, 4))).norm() < 1e-7);
}

TEST_CASE("double-row monodromy obeys the reflection algebra") {
  const ModelParams p = params_n(2);
  const Complex u1 = 0.41, u2 = 0.93;
  const int n = 4;  // two auxiliary factors, two sites
  const Operator t1 = oracle::embed_subset(double_row_monodromy(u1, p).value.full, {1, 3, 4}, n);
  const Operator t2 = oracle::embed_subset(double_row_monodromy(u2, p).value.full, {2, 3, 4}, n);
  auto r12 = [&](Complex x) { return oracle::embed_pair(r_matrix(x, p.eta), 1, 2, n); };
  auto r21 = [&](Complex x) { return oracle::embed_pair(r_matrix(x, p.eta), 2, 1, n); };
  const Operator lhs = r12(u1 - u2) * t1 * r21(u1 + u2) * t2;
  const Operator rhs = t2 * r12(u1 + u2) * t1 * r21(u1 - u2);
  CHECK((lhs - rhs).norm() / lhs.norm() < 1e-10);
}

TEST_CASE("transfer matrix agrees with the explicit Kronecker construction") {
  for (int n : {1, 2, 3}) {
    const ModelParams p = params_n(n);
    const Complex u{0.58, 0.13};
    const Operator tau = transfer(u, p);
    CHECK(tau.rows() == (Eigen::Index{1} << n));
    CHECK(rel_error(tau, oracle::transfer(u, p)) < 1e-12);
  }
}

TEST_CASE("transfer matrices commute") {
  for (int n : {2, 4}) {
    const ModelParams p = params_n(n);
    const Operator a = transfer(0.51, p), b = transfer(Complex(1.13, 0.2), p);
    CHECK(commutator(a, b) < 1e-11);
    CHECK((a - a.adjoint()).norm() > 1e-6);  // generically non-Hermitian
  }
}

TEST_CASE("transfer at an inhomogeneity is the identity to first order in eta") {
  const ModelParams p = params_n(2);
  const Complex z1 = p.z[0];
  const double d1 = (transfer(z1, p.with_eta(1e-3)) - Operator::Identity(4, 4)).norm();
  const double d2 = (transfer(z1, p.with_eta(1e-4)) - Operator::Identity(4, 4)).norm();
  CHECK(d2 < 1e-2);
  CHECK(d1 / d2 == doctest::Approx(10.0).epsilon(0.05));
}

}  // TEST_SUITE
