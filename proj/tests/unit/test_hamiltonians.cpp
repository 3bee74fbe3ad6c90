#include "../oracles.hpp"

#include "gaudin/hamiltonians.hpp"
#include "gaudin/numerics.hpp"
#include "gaudin/params.hpp"
#include "gaudin/sampling.hpp"

#include <doctest.h>

using namespace gaudin;

namespace {

ModelParams params_n(int n) {
  ModelParams p = desk_instance();
  const std::vector<Complex> z{0.11, 0.23, 0.41, 0.62, 0.87, 1.03};
  p.z.assign(z.begin(), z.begin() + n);
  return p;
}

}  // namespace

TEST_SUITE("hamiltonians") {

TEST_CASE("kbar is 2x2 and 2 pi periodic") {
  const ModelParams p = params_n(2);
  const Complex u{0.44, 0.07};
  const Mat2 k = kbar(u, p);
  CHECK(k.allFinite());
  CHECK((k - kbar(u + 2.0 * M_PI, p)).norm() < 1e-11);
}

TEST_CASE("gamma is non-diagonal and depends on Delta") {
  ModelParams p = params_n(2);
  const Mat2 g = gamma(1, p);
  CHECK(std::abs(g(0, 1)) + std::abs(g(1, 0)) > 1e-3);
  ModelParams q = p;
  q.delta += 1e-3;
  CHECK((gamma(1, q) - g).norm() / 1e-3 > 1e-2);
}

TEST_CASE("gamma is stable under halving the Richardson step") {
  const ModelParams p = params_n(2);
  const Mat2 a = gamma(2, p, {1e-3, 4, 1e-6});
  const Mat2 b = gamma(2, p, {5e-4, 4, 1e-6});
  CHECK(rel_error(Operator(a), Operator(b)) < 1e-7);
}

TEST_CASE("local operator sums apply like their dense form") {
  const ModelParams p = params_n(3);
  const LocalOperatorSum h = hamiltonian_terms(2, p);
  StateVector v(8);
  for (int i = 0; i < 8; ++i) v(i) = Complex(0.1 * i, 1.0 - 0.07 * i);
  CHECK((h.apply(v) - h.dense() * v).norm() < 1e-12 * v.norm() * h.dense().norm());
}

TEST_CASE("direct and transfer-derivative Hamiltonians agree") {
  for (int n : {2, 4}) {
    const ModelParams p = params_n(n);
    for (int j = 1; j <= n; ++j) {
      const Operator direct = hamiltonian_direct(j, p);
      const Operator from_tau = hamiltonian_from_transfer(j, p).value;
      CHECK((direct - from_tau).norm() / direct.norm() < 1e-6);
    }
  }
}

TEST_CASE("H_j is the linear coefficient of the explicit transfer matrix") {
  const ModelParams p = params_n(2);
  const int j = 1;
  const Operator h = hamiltonian_direct(j, p);
  auto error = [&](double eta) {
    const Operator tau = oracle::transfer(p.z[0], p.with_eta(eta));
    return ((tau - Operator::Identity(4, 4)) / eta - h).norm() / h.norm();
  };
  const double e1 = error(1e-3), e2 = error(5e-4);
  CHECK(e1 < 1e-2);
  CHECK(e1 / e2 == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("one-sided quotient error halves with the step") {
  const ModelParams p = params_n(2);
  const RichardsonResult r = hamiltonian_from_transfer(2, p);
  const Operator exact = hamiltonian_direct(2, p);
  const double e_h = (r.quotients[0] - exact).norm();
  const double e_h2 = (r.quotients[1] - exact).norm();
  CHECK(e_h / e_h2 == doctest::Approx(2.0).epsilon(0.05));
  CHECK(rel_error(r.value, exact) < 1e-8);
}

TEST_CASE("Gaudin Hamiltonians commute") {
  Sampler sampler(99);
  for (int n : {2, 4, 6}) {
    const ModelParams p = n == 4 ? params_n(4) : sampler.model(n, 0.1);
    CHECK(max_relative_commutator(build_gaudin_set(p).hams) < 1e-9);
  }
}

TEST_CASE("the as-printed Hamiltonian does not match the transfer derivative") {
  const ModelParams p = params_n(4);
  const ConstructionComparison c =
      compare_constructions(hamiltonian_direct(1, p, {}, HamiltonianReading::as_printed),
                            hamiltonian_from_transfer(1, p).value);
  CHECK(c.relative_after_shift > 1e-2);
}

TEST_CASE("no identity shift between the two constructions") {
  const ModelParams p = params_n(4);
  const ConstructionComparison c =
      compare_constructions(hamiltonian_direct(3, p), hamiltonian_from_transfer(3, p).value);
  CHECK(std::abs(c.identity_shift) < 1e-8);
  CHECK(c.relative_distance < 1e-5);
}

TEST_CASE("Richardson refuses a disagreeing table") {
  const ModelParams p = params_n(2);
  CHECK_THROWS_AS(hamiltonian_from_transfer(1, p, {1e-1, 2, 1e-14}), NumericalDerivativeError);
}

}  // TEST_SUITE
