#pragma once

#include "gaudin/tensor.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gaudin {

inline constexpr double kDefaultEpsDegenerate = 1e-8;
inline constexpr double kDefaultEpsSingularGauge = 1e-10;

// All model constants. Angles are in radians and may be complex.
//
// The dual boundary parameter is derived, never stored: xi_bar = xi + eta * delta.
struct ModelParams {
  Complex lambda1{0.3};
  Complex lambda2{0.7};
  Complex xi{0.5};
  Complex delta{0.2};
  Complex eta{0.1};
  std::vector<Complex> z;

  double eps_degenerate = kDefaultEpsDegenerate;
  double eps_singular_gauge = kDefaultEpsSingularGauge;

  int n_sites() const { return static_cast<int>(z.size()); }
  Complex xi_bar() const { return xi + eta * delta; }
  Complex xi_bar(Complex eta_value) const { return xi + eta_value * delta; }

  // Copy with a different crossing parameter.
  ModelParams with_eta(Complex eta_value) const;
  ModelParams with_z(std::vector<Complex> sites) const;

  // Throws DegeneracyError / SingularGaugeError / IndexError on violated
  // invariants (N >= 1, distinct z under sin(z_j +- z_k), lambda1 != lambda2 mod pi).
  void validate() const;
  // validate() plus N even, as the Bethe construction needs M = N / 2.
  void validate_even() const;

  // Stable 64-bit digest of every field, printed with round-trip precision.
  std::uint64_t hash() const;
  std::string hash_hex() const;
};

// 64-bit FNV-1a digest and its 16-digit lowercase hex form.
std::uint64_t fnv1a(std::string_view s);
std::string hex64(std::uint64_t value);

// Desk-scale instance used throughout the tests and the default config.
ModelParams desk_instance();

}  // namespace gaudin
