#pragma once

#include "gaudin/errors.hpp"
#include "gaudin/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace gaudin {

// |a - b| / max(|a|, |b|, 1).
inline double rel_error(Complex a, Complex b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1.0});
}

// Frobenius analogue of rel_error for operators.
inline double rel_error(const Operator& a, const Operator& b) {
  return (a - b).norm() / std::max({a.norm(), b.norm(), 1.0});
}

struct Determinant {
  Complex value;
  double condition = 1.0;  // 1-norm estimate, >= 1; infinity when singular
};

// LU with partial pivoting.
Determinant lu_determinant(const Eigen::MatrixXcd& m);

inline constexpr double kIllConditioned = 1e10;

struct RichardsonSettings {
  double step = 1e-3;
  int levels = 4;             // quotients at h, h/2, ..., h/2^(levels-1)
  double tolerance = 1e-6;    // relative disagreement between the last two orders
};

struct RichardsonResult {
  Operator value;                    // highest-order extrapolant
  Operator previous_order;           // best extrapolant one order lower
  double disagreement = 0.0;         // rel_error(value, previous_order)
  std::vector<Operator> quotients;   // raw one-sided quotients, step h/2^k
};

// Richardson extrapolation of one-sided difference quotients q(h) whose error
// expands in integer powers of h. `quotient(h)` must return q(h).
template <typename Quotient>
RichardsonResult richardson(Quotient&& quotient, const RichardsonSettings& settings,
                            const std::string& what = "derivative") {
  if (settings.levels < 2) throw NumericalDerivativeError(what + ": need at least 2 levels");
  RichardsonResult out;
  std::vector<Operator> table;
  for (int k = 0; k < settings.levels; ++k) {
    table.push_back(quotient(settings.step / std::pow(2.0, k)));
  }
  out.quotients = table;
  for (int m = 1; m < settings.levels; ++m) {
    const double w = std::pow(2.0, m);
    if (m == settings.levels - 1) out.previous_order = table[1];
    std::vector<Operator> next;
    for (std::size_t k = 0; k + 1 < table.size(); ++k) {
      next.push_back((w * table[k + 1] - table[k]) / (w - 1.0));
    }
    table = std::move(next);
  }
  out.value = table.front();
  out.disagreement = rel_error(out.value, out.previous_order);
  if (!(out.disagreement <= settings.tolerance)) {
    std::ostringstream msg;
    msg << what << ": Richardson orders disagree by " << out.disagreement << " > "
        << settings.tolerance;
    throw NumericalDerivativeError(msg.str());
  }
  return out;
}

}  // namespace gaudin
