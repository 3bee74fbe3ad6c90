#pragma once

// Seeded random draws for the randomized verification suites. Every draw is
// uniform in [lo, hi] and redrawn while any relevant sine is smaller than
// `margin` in modulus.

#include "gaudin/params.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace gaudin {

inline constexpr double kDrawLow = 0.1;
inline constexpr double kDrawHigh = 1.4;
inline constexpr double kDrawMargin = 0.05;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo = kDrawLow, double hi = kDrawHigh);

  // Random lambda1, lambda2, xi, delta and z; eta is passed through. Rejects
  // sin(lambda1 - lambda2), sin(2 z_j), sin(z_j +- z_k) and
  // sin(lambda_l + xi +- z_j) below the margin.
  ModelParams model(int n_sites, Complex eta, double margin = kDrawMargin);

  // `count` spectral parameters away from +-z, from each other, from `avoid`,
  // from 0 and pi/2, and from the boundary poles lambda_l + xi +- u.
  std::vector<Complex> spectral(int count, const ModelParams& params, double margin = kDrawMargin,
                                const std::vector<Complex>& avoid = {});

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gaudin
