#include "../oracles.hpp"

#include "gaudin/bethe.hpp"
#include "gaudin/errors.hpp"
#include "gaudin/params.hpp"
#include "gaudin/sampling.hpp"
#include "gaudin/scalar_products.hpp"

#include <doctest.h>

#include <map>

using namespace gaudin;

namespace {

ModelParams params_n4() { return desk_instance().with_z({0.11, 0.23, 0.41, 0.62}); }

const std::vector<BetheRootSet>& solved(Kind kind, int n) {
  static std::map<std::pair<int, int>, std::vector<BetheRootSet>> cache;
  auto& slot = cache[{to_int(kind), n}];
  if (slot.empty()) slot = solve_bethe(kind, n == 2 ? desk_instance() : params_n4()).sets;
  return slot;
}

// <target| prod_u O(u) ... |start> with dense operators from the Kronecker oracle.
Complex dense_chain(const StateVector& bra, const StateVector& ket,
                    const std::vector<std::pair<bool, Complex>>& ops, bool gauged,
                    const ModelParams& p) {
  StateVector v = ket;
  for (const auto& [is_b, u] : ops) v = oracle::creation(is_b, gauged, u, p) * v;
  return bra.transpose() * v;
}

}  // namespace

TEST_SUITE("scalar_products") {

TEST_CASE("N = 1 partition function closed form") {
  const ModelParams p = desk_instance().with_z({0.27});
  const Complex v{0.83, 0.04};
  const Complex l1 = p.lambda1, l2 = p.lambda2, xi = p.xi, z = p.z[0];
  const Complex closed = std::sin(l1 + xi + z) * std::sin(l2 + xi - z) * std::sin(2.0 * v) /
                         (std::sin(l1 + xi - v) * std::sin(l2 + xi - v) * std::sin(v - z) * std::sin(v + z));
  CHECK(rel_error(partition_det(Kind::two, {v}, p).value, closed) < 1e-14);
  CHECK(rel_error(partition_recursive(Kind::two, {v}, p).value, closed) < 1e-14);
  CHECK(rel_error(partition_bruteforce(Kind::two, {v}, p).value, closed) < 1e-14);
}

TEST_CASE("partition function triangle on random draws") {
  Sampler sampler(41);
  for (int n : {2, 3, 4}) {
    for (int draw = 0; draw < 3; ++draw) {
      const ModelParams p = sampler.model(n, 0.1);
      const auto ubar = sampler.spectral(n, p);
      for (Kind k : {Kind::one, Kind::two}) {
        const Complex det = partition_det(k, ubar, p).value;
        CHECK(rel_error(det, partition_bruteforce(k, ubar, p).value) < 1e-10);
        CHECK(rel_error(det, partition_recursive(k, ubar, p).value) < 1e-10);
      }
    }
  }
}

TEST_CASE("partition function brute force matches dense Kronecker contraction") {
  const ModelParams p = desk_instance().with_z({0.11, 0.23, 0.41});
  const std::vector<Complex> ubar{0.52, Complex(0.97, 0.1), 1.24};
  std::vector<std::pair<bool, Complex>> ops;
  for (const Complex u : ubar) ops.emplace_back(true, u);
  const Complex expected = dense_chain(all_down(3), all_up(3), ops, false, p);
  CHECK(rel_error(partition_bruteforce(Kind::two, ubar, p).value, expected) < 1e-13);
}

TEST_CASE("recursion is permutation invariant") {
  const ModelParams p = desk_instance().with_z({0.11, 0.23, 0.41});
  const std::vector<Complex> a{0.52, Complex(0.97, 0.1), 1.24};
  const std::vector<Complex> b{a[2], a[0], a[1]};
  for (Kind k : {Kind::one, Kind::two}) {
    CHECK(rel_error(partition_recursive(k, a, p).value, partition_recursive(k, b, p).value) < 1e-10);
  }
}

TEST_CASE("spin-count selection rule") {
  const ModelParams p = desk_instance().with_z({0.11, 0.23, 0.41});
  CHECK(std::abs(partition_bruteforce(Kind::two, {0.52, 0.97}, p).value) == 0.0);
  CHECK_THROWS_AS(partition_det(Kind::two, {0.52, 0.97}, p), IndexError);
}

TEST_CASE("nearly coincident arguments stay finite") {
  const ModelParams p = desk_instance().with_z({0.11, 0.23, 0.41});
  const std::vector<Complex> ubar{0.52, 0.52 + 1e-4, 1.24};
  const Complex det = partition_det(Kind::one, ubar, p).value;
  CHECK(std::isfinite(std::abs(det)));
  CHECK(rel_error(det, partition_bruteforce(Kind::one, ubar, p).value) < 1e-6);
}

TEST_CASE("coincident arguments are a degeneracy error") {
  const ModelParams p = desk_instance();
  CHECK_THROWS_AS(s12({0.5}, {0.5}, p), DegeneracyError);
}

TEST_CASE("S^{1,2} is symmetric and matches a dense contraction") {
  const ModelParams p = desk_instance();
  const Complex u{0.61, 0.08}, v = 1.17;
  const Complex value = s12({u}, {v}, p).value;
  CHECK(rel_error(value, s12({v}, {u}, p).value) < 1e-13);
  const Complex dense = dense_chain(all_up(2), all_down(2), {{false, u}, {false, v}}, false, p);
  CHECK(rel_error(value, dense) < 1e-12);
  CHECK(rel_error(s21({u}, {v}, p).value,
                  dense_chain(all_down(2), all_up(2), {{true, u}, {true, v}}, false, p)) < 1e-12);
}

TEST_CASE("brute-force scalar products: tilde and gauged forms") {
  const ModelParams p = desk_instance();
  const std::vector<Complex> u{Complex(0.61, 0.08)};
  const std::vector<Complex> v{1.17};
  for (Kind k : {Kind::one, Kind::two}) {
    const Complex tilde = s_kk_bruteforce(k, u, v, p).value;
    const Complex gauged = s_kk_bruteforce_gauged(k, u, v, p).value;
    CHECK(rel_error(gauged / vacuum_overlap(p), tilde) < 1e-11);
  }
  CHECK(std::abs(s_kk_bruteforce(Kind::one, {}, {}, p).value - 1.0) < 1e-15);
  CHECK(std::abs(s_kk_bruteforce_gauged(Kind::one, {}, {}, p).value - vacuum_overlap(p)) < 1e-15);
  const Complex dense = dense_chain(all_up(2), all_up(2), {{true, v[0]}, {false, u[0]}}, false, p);
  CHECK(rel_error(s_kk_bruteforce(Kind::one, u, v, p).value, dense) < 1e-12);
}

TEST_CASE("spin count mismatch between C and B gives zero") {
  const ModelParams p = params_n4();
  StateVector x = all_up(4);
  x = op_tilde_b(0.7, p).apply(x);
  x = op_tilde_b(1.1, p).apply(x);
  x = op_tilde_c(0.9, p).apply(x);
  CHECK(std::abs(x(0)) == 0.0);
}

TEST_CASE("determinant scalar products match brute force on shell") {
  for (int n : {2, 4}) {
    const ModelParams p = n == 2 ? desk_instance() : params_n4();
    Sampler sampler(53);
    for (Kind k : {Kind::one, Kind::two}) {
      for (const auto& s : solved(k, n)) {
        const auto u = sampler.spectral(static_cast<int>(s.roots.size()), p, kDrawMargin, s.roots);
        const ScalarProductResult det = s_kk_det(k, u, s.roots, p);
        CHECK(rel_error(det.value, s_kk_bruteforce(k, u, s.roots, p).value) < 1e-8);
      }
    }
  }
}

TEST_CASE("determinant scalar product is symmetric in u") {
  const ModelParams p = params_n4();
  const auto& s = solved(Kind::one, 4).front();
  const std::vector<Complex> u{0.57, Complex(1.02, 0.12)};
  CHECK(rel_error(s11_det(u, s.roots, p).value, s11_det({u[1], u[0]}, s.roots, p).value) < 1e-12);
  CHECK(rel_error(s11_det(u, s.roots, p).value,
                  s11_det(u, {s.roots[1], s.roots[0]}, p).value) < 1e-12);
}

TEST_CASE("off-shell roots: refused by default, disagree when forced") {
  const ModelParams p = params_n4();
  const auto& s = solved(Kind::two, 4).front();
  const std::vector<Complex> u{0.57, Complex(1.02, 0.12)};
  const double on = rel_error(s22_det(u, s.roots, p).value, s_kk_bruteforce(Kind::two, u, s.roots, p).value);
  std::vector<Complex> off = s.roots;
  off[0] += 1e-3;
  CHECK_THROWS_AS(s22_det(u, off, p), OnShellRequiredError);
  const double bad = rel_error(s22_det(u, off, p, ShellPolicy::skip).value,
                               s_kk_bruteforce(Kind::two, u, off, p).value);
  CHECK(bad > 1e3 * std::max(on, 1e-16));
}

TEST_CASE("F divided by its boundary prefactor is even in u") {
  const ModelParams p = desk_instance();
  const auto& s = solved(Kind::one, 2).front();
  const Complex u{0.64, 0.09};
  auto pref = [&](Complex x) { return std::sin(p.lambda1 + p.xi - x) * std::sin(p.lambda2 + p.xi - x); };
  const Complex a = f_factor(Kind::one, 1, u, s.roots, p) / pref(u);
  const Complex b = f_factor(Kind::one, 1, -u, s.roots, p) / pref(-u);
  CHECK(rel_error(a, b) < 1e-12);
}

TEST_CASE("intermediate functions") {
  const ModelParams p = params_n4();
  const auto& s = solved(Kind::one, 4).front();
  const std::vector<Complex> u{0.57, Complex(1.02, 0.12)};
  const Complex s11 = s_kk_bruteforce(Kind::one, u, s.roots, p).value;
  CHECK(rel_error(intermediate_g(u, {}, s.roots, p), s11) < 1e-10);
  CHECK(rel_error(intermediate_g_recursive(u, {}, s.roots, p), s11) < 1e-10);
  CHECK(rel_error(intermediate_g({u[0]}, {2}, s.roots, p),
                  intermediate_g_recursive({u[0]}, {2}, s.roots, p)) < 1e-10);
  // G^(0) on sites {1, 3}: the partition function of the two-site chain (z_1, z_3).
  const ModelParams sub = p.with_z({p.z[0], p.z[2]});
  CHECK(rel_error(intermediate_g({}, {1, 3}, s.roots, p), partition_det(Kind::two, s.roots, sub).value) < 1e-10);
  CHECK_THROWS_AS(intermediate_g({u[0]}, {1, 1}, s.roots, p), IndexError);
}

TEST_CASE("brute force has a dimension cap") {
  std::vector<Complex> z;
  for (int i = 0; i < kMaxSites + 1; ++i) z.push_back(0.05 + 0.1 * i);
  ModelParams p = desk_instance();
  p.z = z;
  CHECK_THROWS(partition_bruteforce(Kind::one, z, p));
}

}  // TEST_SUITE
