#include "gaudin/tensor.hpp"

#include "gaudin/errors.hpp"

#include <string>

namespace gaudin {

namespace pauli {
Mat2 identity() { return Mat2::Identity(); }

Mat2 plus() {
  Mat2 m = Mat2::Zero();
  m(0, 1) = 1.0;
  return m;
}

Mat2 minus() {
  Mat2 m = Mat2::Zero();
  m(1, 0) = 1.0;
  return m;
}

Mat2 z() {
  Mat2 m = Mat2::Zero();
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}
}  // namespace pauli

Mat4 swap_operator() {
  Mat4 p = Mat4::Zero();
  p(0, 0) = 1.0;
  p(1, 2) = 1.0;
  p(2, 1) = 1.0;
  p(3, 3) = 1.0;
  return p;
}

std::size_t hilbert_dim(int n_sites) {
  if (n_sites < 0 || n_sites > 2 * kMaxSites) {
    throw IndexError("hilbert_dim: invalid site count " + std::to_string(n_sites));
  }
  return std::size_t{1} << n_sites;
}

namespace {

void check_site(int site, int n_sites, const char* fn) {
  if (n_sites < 1 || site < 1 || site > n_sites) {
    throw IndexError(std::string(fn) + ": site " + std::to_string(site) + " out of range 1.." +
                     std::to_string(n_sites));
  }
}

// Bit mask of `site` (1-based) in a basis index over n_sites factors.
std::size_t site_bit(int site, int n_sites) { return std::size_t{1} << (n_sites - site); }

}  // namespace

void apply_site(const Mat2& op2, int site, int n_sites, Eigen::Ref<Eigen::MatrixXcd> target) {
  check_site(site, n_sites, "apply_site");
  const std::size_t dim = hilbert_dim(n_sites);
  if (static_cast<std::size_t>(target.rows()) != dim) {
    throw IndexError("apply_site: row count does not match 2^n");
  }
  const std::size_t bit = site_bit(site, n_sites);
  for (Eigen::Index col = 0; col < target.cols(); ++col) {
    for (std::size_t i0 = 0; i0 < dim; ++i0) {
      if (i0 & bit) continue;
      const std::size_t i1 = i0 | bit;
      const Complex a = target(i0, col);
      const Complex b = target(i1, col);
      target(i0, col) = op2(0, 0) * a + op2(0, 1) * b;
      target(i1, col) = op2(1, 0) * a + op2(1, 1) * b;
    }
  }
}

void apply_two_site(const Mat4& op4, int site_a, int site_b, int n_sites,
                    Eigen::Ref<Eigen::MatrixXcd> target) {
  check_site(site_a, n_sites, "apply_two_site");
  check_site(site_b, n_sites, "apply_two_site");
  if (site_a == site_b) throw IndexError("apply_two_site: coincident sites");
  const std::size_t dim = hilbert_dim(n_sites);
  if (static_cast<std::size_t>(target.rows()) != dim) {
    throw IndexError("apply_two_site: row count does not match 2^n");
  }
  const std::size_t bit_a = site_bit(site_a, n_sites);
  const std::size_t bit_b = site_bit(site_b, n_sites);
  // Local index 2 * x_a + x_b.
  for (Eigen::Index col = 0; col < target.cols(); ++col) {
    for (std::size_t base = 0; base < dim; ++base) {
      if (base & (bit_a | bit_b)) continue;
      const std::size_t idx[4] = {base, base | bit_b, base | bit_a, base | bit_a | bit_b};
      Complex in[4];
      for (int k = 0; k < 4; ++k) in[k] = target(idx[k], col);
      for (int r = 0; r < 4; ++r) {
        Complex acc = 0.0;
        for (int k = 0; k < 4; ++k) acc += op4(r, k) * in[k];
        target(idx[r], col) = acc;
      }
    }
  }
}

Operator embed_site(const Mat2& op2, int site, int n_sites) {
  check_site(site, n_sites, "embed_site");
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(n_sites));
  Operator out = Operator::Identity(dim, dim);
  apply_site(op2, site, n_sites, out);
  return out;
}

Operator embed_two_site(const Mat4& op4, int site_a, int site_b, int n_sites) {
  check_site(site_a, n_sites, "embed_two_site");
  check_site(site_b, n_sites, "embed_two_site");
  if (site_a == site_b) throw IndexError("embed_two_site: coincident sites");
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(n_sites));
  Operator out = Operator::Identity(dim, dim);
  apply_two_site(op4, site_a, site_b, n_sites, out);
  return out;
}

StateVector all_up(int n_sites) {
  StateVector v = StateVector::Zero(static_cast<Eigen::Index>(hilbert_dim(n_sites)));
  v(0) = 1.0;
  return v;
}

StateVector all_down(int n_sites) {
  StateVector v = StateVector::Zero(static_cast<Eigen::Index>(hilbert_dim(n_sites)));
  v(v.size() - 1) = 1.0;
  return v;
}

StateVector product_state(const std::vector<Eigen::Vector2cd>& spinors) {
  StateVector v = StateVector::Ones(1);
  for (const auto& s : spinors) {
    StateVector next(v.size() * 2);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      next(2 * i) = v(i) * s(0);
      next(2 * i + 1) = v(i) * s(1);
    }
    v = std::move(next);
  }
  return v;
}

std::size_t basis_index(const std::vector<int>& down_sites, int n_sites) {
  std::size_t idx = 0;
  for (int s : down_sites) {
    check_site(s, n_sites, "basis_index");
    const std::size_t bit = site_bit(s, n_sites);
    if (idx & bit) throw IndexError("basis_index: repeated site " + std::to_string(s));
    idx |= bit;
  }
  return idx;
}

Operator trace_auxiliary(const Operator& full) {
  if (full.rows() != full.cols() || full.rows() % 2 != 0) {
    throw IndexError("trace_auxiliary: expected a square matrix of even dimension");
  }
  const Eigen::Index d = full.rows() / 2;
  return full.topLeftCorner(d, d) + full.bottomRightCorner(d, d);
}

double frobenius_distance(const Operator& a, const Operator& b) { return (a - b).norm(); }

}  // namespace gaudin
