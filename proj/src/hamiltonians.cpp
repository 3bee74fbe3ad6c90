#include "gaudin/hamiltonians.hpp"

#include "gaudin/errors.hpp"
#include "gaudin/parallel.hpp"
#include "gaudin/trig.hpp"
#include "gaudin/vertex_model.hpp"

#include <string>

namespace gaudin {

StateVector LocalOperatorSum::apply(const StateVector& v) const {
  StateVector out = StateVector::Zero(v.size());
  StateVector work;
  for (const auto& t : one_site_) {
    work = v;
    apply_site(t.op, t.site, n_sites_, work);
    out += work;
  }
  for (const auto& t : two_site_) {
    work = v;
    apply_two_site(t.op, t.a, t.b, n_sites_, work);
    out += work;
  }
  return out;
}

Operator LocalOperatorSum::dense() const {
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(n_sites_));
  Operator out = Operator::Zero(dim, dim);
  for (const auto& t : one_site_) out += embed_site(t.op, t.site, n_sites_);
  for (const auto& t : two_site_) out += embed_two_site(t.op, t.a, t.b, n_sites_);
  return out;
}

namespace {

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

// (sigma^+ sigma^- + sigma^- sigma^+ + c (sigma^z sigma^z - 1) / 2) / s on two sites.
Mat4 exchange_term(Complex c, Complex s) {
  const Mat4 xy = kron(pauli::plus(), pauli::minus()) + kron(pauli::minus(), pauli::plus());
  const Mat4 zz = kron(pauli::z(), pauli::z());
  return (xy + c * (zz - Mat4::Identity()) / 2.0) / s;
}

void check_site_index(int site, const ModelParams& params) {
  if (site < 1 || site > params.n_sites()) {
    throw IndexError("site " + std::to_string(site) + " out of range 1.." +
                     std::to_string(params.n_sites()));
  }
}

}  // namespace

Mat2 kbar(Complex u, const ModelParams& params) {
  Mat4 kp = Mat4::Zero();
  const Mat2 k = k_plus(u, params);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) kp.block<2, 2>(2 * i, 2 * j) = k(i, j) * Mat2::Identity();
  const Mat4 x = kp * r_matrix(2.0 * u, params.eta, params.eps_degenerate) * swap_operator();
  Mat2 out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) out(a, b) = x(a, b) + x(2 + a, 2 + b);
  return out;
}

Mat2 gamma(int site, const ModelParams& params, const RichardsonSettings& settings,
           HamiltonianReading reading) {
  check_site_index(site, params);
  const Complex u = params.z[site - 1];
  const Mat2 at_zero = kbar(u, params.with_eta(0.0));
  const RichardsonResult d = richardson(
      [&](double h) -> Operator { return (kbar(u, params.with_eta(h)) - at_zero) / h; }, settings,
      "Gamma_" + std::to_string(site));
  const Mat2 dk = d.value;
  const Mat2 k = k_minus(u, params);
  return reading == HamiltonianReading::derived ? Mat2(k * dk) : Mat2(dk * k);
}

LocalOperatorSum hamiltonian_terms(int site, const ModelParams& params,
                                   const RichardsonSettings& settings, HamiltonianReading reading) {
  params.validate();
  check_site_index(site, params);
  const int n = params.n_sites();
  const Complex zj = params.z[site - 1];
  const double eps = params.eps_degenerate;

  const Mat2 k = k_minus(zj, params);
  const Mat2 k_inv = k.inverse();
  const Mat2 left = reading == HamiltonianReading::derived ? k : k_inv;
  const Mat2 right = reading == HamiltonianReading::derived ? k_inv : k;
  const Mat4 conj_left = kron(left, Mat2::Identity());
  const Mat4 conj_right = kron(right, Mat2::Identity());

  LocalOperatorSum h(n);
  h.add(site, gamma(site, params, settings, reading));
  for (int other = 1; other <= n; ++other) {
    if (other == site) continue;
    const Complex zk = params.z[other - 1];
    const Complex s_minus = std::sin(zj - zk);
    const Complex s_plus = std::sin(zj + zk);
    if (std::abs(s_minus) < eps || std::abs(s_plus) < eps) {
      throw DegeneracyError("hamiltonian: z_" + std::to_string(site) + " and z_" +
                            std::to_string(other) + " are degenerate");
    }
    // Both terms are written on the ordered pair (site, other).
    h.add(site, other, exchange_term(std::cos(zj - zk), s_minus));
    h.add(site, other, conj_left * exchange_term(std::cos(zj + zk), s_plus) * conj_right);
  }
  return h;
}

Operator hamiltonian_direct(int site, const ModelParams& params, const RichardsonSettings& settings,
                            HamiltonianReading reading) {
  return hamiltonian_terms(site, params, settings, reading).dense();
}

RichardsonResult hamiltonian_from_transfer(int site, const ModelParams& params,
                                           const RichardsonSettings& settings) {
  params.validate();
  check_site_index(site, params);
  if (settings.step < 1e-6) throw NumericalDerivativeError("transfer derivative: step below 1e-6");
  const Complex zj = params.z[site - 1];
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(params.n_sites()));
  const Operator id = Operator::Identity(dim, dim);
  return richardson(
      [&](double h) -> Operator { return (transfer(zj, params.with_eta(h)) - id) / h; }, settings,
      "dtau(z_" + std::to_string(site) + ")/deta");
}

ConstructionComparison compare_constructions(const Operator& direct, const Operator& from_transfer) {
  ConstructionComparison c;
  const Operator diff = direct - from_transfer;
  const double scale = std::max(from_transfer.norm(), 1e-300);
  c.relative_distance = diff.norm() / scale;
  c.identity_shift = diff.trace() / static_cast<double>(diff.rows());
  c.relative_after_shift =
      (diff - c.identity_shift * Operator::Identity(diff.rows(), diff.cols())).norm() / scale;
  return c;
}

GaudinSet build_gaudin_set(const ModelParams& params, const RichardsonSettings& settings,
                           HamiltonianReading reading) {
  params.validate();
  GaudinSet set{params, std::vector<Operator>(static_cast<std::size_t>(params.n_sites()))};
  parallel_for(set.hams.size(), [&](std::size_t i) {
    set.hams[i] = hamiltonian_direct(static_cast<int>(i) + 1, params, settings, reading);
  });
  return set;
}

double max_relative_commutator(const std::vector<Operator>& ops) {
  double worst = 0.0;
  for (std::size_t a = 0; a < ops.size(); ++a) {
    for (std::size_t b = a + 1; b < ops.size(); ++b) {
      const double scale = ops[a].norm() * ops[b].norm();
      const double c = (ops[a] * ops[b] - ops[b] * ops[a]).norm();
      worst = std::max(worst, scale > 0.0 ? c / scale : c);
    }
  }
  return worst;
}

}  // namespace gaudin
