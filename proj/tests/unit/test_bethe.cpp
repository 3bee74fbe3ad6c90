#include "../oracles.hpp"

#include "gaudin/bethe.hpp"
#include "gaudin/errors.hpp"
#include "gaudin/hamiltonians.hpp"
#include "gaudin/params.hpp"

#include <doctest.h>

#include <algorithm>
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

}  // namespace

TEST_SUITE("bethe") {

TEST_CASE("vacuum amplitudes are products of per-site gauge factors") {
  const ModelParams p = desk_instance().with_z({0.11, 0.23, 0.41});
  const StateVector v = vacuum(Kind::one, p);
  for (Eigen::Index b = 0; b < 8; ++b) {
    Complex expected = 1.0;
    for (int j = 1; j <= 3; ++j) {
      const bool up = ((b >> (3 - j)) & 1) == 0;
      if (up) expected *= std::exp(-kI * (p.z[static_cast<std::size_t>(j - 1)] + 2.0 * p.lambda1));
    }
    CHECK(std::abs(v(b) - expected) < 1e-15);
  }
}

TEST_CASE("the two vacua coincide at equal lambdas") {
  ModelParams p = desk_instance();
  p.lambda2 = p.lambda1;
  CHECK((vacuum(Kind::one, p) - vacuum(Kind::two, p)).norm() == 0.0);
  CHECK_THROWS_AS(dual_vacuum(Kind::one, p), SingularGaugeError);
}

TEST_CASE("dual vacua are biorthogonal up to the vacuum overlap") {
  const ModelParams p = params_n4();
  CHECK(std::abs(contract(dual_vacuum(Kind::one, p), vacuum(Kind::two, p))) < 1e-15);
  CHECK(std::abs(contract(dual_vacuum(Kind::two, p), vacuum(Kind::one, p))) < 1e-15);
  Complex expected = 1.0;
  for (const Complex z : p.z) expected *= std::exp(-2.0 * kI * (z + p.lambda1 + p.lambda2));
  for (Kind k : {Kind::one, Kind::two}) {
    const Complex overlap = contract(dual_vacuum(k, p), vacuum(k, p));
    CHECK(std::abs(overlap - expected) < 1e-14);
    CHECK(std::abs(overlap - vacuum_overlap(p)) < 1e-14);
  }
}

TEST_CASE("dual vacuum prefactor diverges as lambda2 approaches lambda1") {
  ModelParams p = desk_instance();
  p.lambda2 = p.lambda1 + 1e-2;
  const double far = dual_vacuum(Kind::one, p).norm();
  p.lambda2 = p.lambda1 + 1e-3;
  const double near = dual_vacuum(Kind::one, p).norm();
  CHECK(near / far > 50.0);
}

TEST_CASE("creation operators agree with explicit Kronecker sums") {
  const ModelParams p = params_n4();
  const Complex u{0.72, 0.15};
  CHECK(rel_error(op_b(u, p).dense(), oracle::creation(true, true, u, p)) < 1e-13);
  CHECK(rel_error(op_c(u, p).dense(), oracle::creation(false, true, u, p)) < 1e-13);
  CHECK(rel_error(op_tilde_b(u, p).dense(), oracle::creation(true, false, u, p)) < 1e-13);
  CHECK(rel_error(op_tilde_c(u, p).dense(), oracle::creation(false, false, u, p)) < 1e-13);
}

TEST_CASE("B operators commute and annihilate after N + 1 applications") {
  const ModelParams p = params_n4();
  const Operator b1 = op_b(0.52, p).dense(), b2 = op_b(Complex(1.1, -0.2), p).dense();
  CHECK((b1 * b2 - b2 * b1).norm() / (b1 * b2).norm() < 1e-13);
  StateVector v = vacuum(Kind::one, p);
  for (int i = 0; i < 4; ++i) v = b1 * v;
  CHECK(v.norm() > 1e-8);
  const double scale = b1.norm() * v.norm();
  v = b1 * v;
  CHECK(v.norm() < 1e-13 * scale);
}

TEST_CASE("tilde C matrix elements are the printed coefficients") {
  const ModelParams p = params_n4();
  const Complex u = 0.93;
  const Operator c = op_tilde_c(u, p).dense();
  const Operator c2 = op_tilde_c(0.31, p).dense();
  for (int i = 1; i <= 4; ++i) {
    const auto col = static_cast<Eigen::Index>(basis_index({i}, 4));
    CHECK(std::abs(c(0, col) - coeff_c(u, p.z[static_cast<std::size_t>(i - 1)], p)) < 1e-15);
  }
  CHECK((c * c2 - c2 * c).norm() < 1e-13);
}

TEST_CASE("Bethe state basics") {
  const ModelParams p = params_n4();
  CHECK((bethe_state(Kind::one, {}, p) - vacuum(Kind::one, p)).norm() == 0.0);
  const std::vector<Complex> roots{0.47, Complex(0.9, 0.1), 1.21};
  const StateVector a = bethe_state(Kind::two, roots, p);
  const StateVector b = bethe_state(Kind::two, {roots[2], roots[0], roots[1]}, p);
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12 * a.cwiseAbs().maxCoeff());
  CHECK_THROWS_AS(bethe_state(Kind::one, {0.4, -0.4}, p), DegeneracyError);
  CHECK_THROWS_AS(kind_from_int(3), IndexError);
}

TEST_CASE("Bethe residual parity and permutation symmetry") {
  const ModelParams p = params_n4();
  const std::vector<Complex> v{0.47, Complex(0.9, 0.1)};
  for (Kind k : {Kind::one, Kind::two}) {
    const auto r = ba_residual(k, v, p);
    const auto flipped = ba_residual(k, {-v[0], v[1]}, p);
    CHECK(std::abs(r[0] - flipped[0]) < 1e-13 * std::max(1.0, std::abs(r[0])));
    CHECK(std::abs(r[1] - flipped[1]) < 1e-13 * std::max(1.0, std::abs(r[1])));
    const auto swapped = ba_residual(k, {v[1], v[0]}, p);
    CHECK(std::abs(r[0] - swapped[1]) < 1e-13 * std::max(1.0, std::abs(r[0])));
    CHECK(std::abs(r[1] - swapped[0]) < 1e-13 * std::max(1.0, std::abs(r[1])));
  }
}

TEST_CASE("analytic Jacobians match finite differences") {
  const ModelParams p = params_n4();
  const std::vector<Complex> v{0.47, Complex(0.9, 0.1)};
  for (Kind k : {Kind::one, Kind::two}) {
    const Eigen::MatrixXcd fd = oracle::fd_jacobian(k, v, p);
    CHECK((ba_jacobian(k, v, p) - fd).norm() / fd.norm() < 1e-7);
  }
}

TEST_CASE("desk instance: converged sets for both kinds") {
  for (Kind k : {Kind::one, Kind::two}) {
    const auto& sets = solved(k, 2);
    REQUIRE(!sets.empty());
    for (const auto& s : sets) {
      CHECK(s.converged);
      CHECK(s.roots.size() == 1);
      CHECK(ba_residual_norm(k, s.roots, desk_instance()) < 1e-11);
    }
  }
}

TEST_CASE("sign flips map solutions onto the same canonical set") {
  const ModelParams p = params_n4();
  for (const auto& s : solved(Kind::one, 4)) {
    std::vector<Complex> flipped = s.roots;
    flipped[0] = -flipped[0] + M_PI;
    CHECK(ba_residual_norm(Kind::one, flipped, p) < 1e-10);
    CHECK(root_set_distance(canonical_roots(flipped), s.roots) < 1e-12);
  }
}

TEST_CASE("N = 4, M = 2 finds several distinct sets") {
  const auto& sets = solved(Kind::two, 4);
  CHECK(sets.size() >= 2);
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a + 1; b < sets.size(); ++b)
      CHECK(root_set_distance(sets[a].roots, sets[b].roots) > 1e-6);
}

TEST_CASE("loose solutions re-polish quadratically") {
  SolverSettings loose;
  loose.tol = 1e-11;
  loose.starts = 8;
  const ModelParams p = params_n4();
  const SolveResult r = solve_bethe(Kind::one, p, loose);
  REQUIRE(!r.sets.empty());
  std::vector<Complex> v = r.sets.front().roots;
  v[0] += 1e-7;
  const BetheRootSet polished = polish(Kind::one, v, p, 2);
  CHECK(polished.residual_norm < 1e-13);
}

TEST_CASE("solver is deterministic for a fixed seed") {
  const ModelParams p = params_n4();
  SolverSettings s;
  s.starts = 16;
  const SolveResult a = solve_bethe(Kind::one, p, s);
  const SolveResult b = solve_bethe(Kind::one, p, s);
  REQUIRE(a.sets.size() == b.sets.size());
  for (std::size_t i = 0; i < a.sets.size(); ++i) CHECK(a.sets[i].roots == b.sets[i].roots);
}

TEST_CASE("Bethe states are simultaneous eigenvectors") {
  for (int n : {2, 4}) {
    const ModelParams p = n == 2 ? desk_instance() : params_n4();
    for (Kind k : {Kind::one, Kind::two}) {
      for (const auto& s : solved(k, n)) {
        const StateVector v = bethe_state(k, s.roots, p);
        CHECK(v.norm() > 1e-6);
        for (const EigenRecord& e : eigen_check(k, s.roots, p)) {
          CHECK(e.eigen_residual < 1e-8);
          CHECK(rel_error(e.rayleigh, e.value) < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("eigenvalues lie in the spectrum from exact diagonalization") {
  const ModelParams p = desk_instance();
  const GaudinSet g = build_gaudin_set(p);
  for (Kind k : {Kind::one, Kind::two}) {
    for (const auto& s : solved(k, 2)) {
      for (int j = 1; j <= 2; ++j) {
        const auto spec = oracle::spectrum(g.hams[static_cast<std::size_t>(j - 1)]);
        CHECK(oracle::distance_to_spectrum(eigenvalue(k, j, s.roots, p), spec) < 1e-7);
      }
    }
  }
}

TEST_CASE("the literal eigenvalue reading fails") {
  const ModelParams p = desk_instance();
  const auto& s = solved(Kind::one, 2).front();
  const auto records = eigen_check(Kind::one, s.roots, p, {}, EigenvalueReading::literal);
  const double worst = std::max_element(records.begin(), records.end(), [](auto& a, auto& b) {
                         return a.eigen_residual < b.eigen_residual;
                       })->eigen_residual;
  CHECK(worst > 1e-3);
}

TEST_CASE("off-shell roots are not eigenvectors") {
  const ModelParams p = desk_instance();
  std::vector<Complex> v = solved(Kind::one, 2).front().roots;
  v[0] += 1e-2;
  double worst = 0.0;
  for (const EigenRecord& e : eigen_check(Kind::one, v, p)) worst = std::max(worst, e.eigen_residual);
  CHECK(worst > 1e-4);
}

TEST_CASE("eigenvalue symmetries") {
  const ModelParams p = params_n4();
  const std::vector<Complex> v{0.47, Complex(0.9, 0.1)};
  const Complex e = eigenvalue(Kind::one, 3, v, p);
  CHECK(std::abs(e - eigenvalue(Kind::one, 3, {v[1], -v[0]}, p)) < 1e-13);
  ModelParams q = p;
  q.delta = 0.0;
  ModelParams swapped = q;
  std::swap(swapped.lambda1, swapped.lambda2);
  CHECK(std::abs(eigenvalue(Kind::one, 2, v, q) - eigenvalue(Kind::two, 2, v, swapped)) < 1e-13);
}

}  // TEST_SUITE
