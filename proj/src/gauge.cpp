#include "gaudin/gauge.hpp"

#include "gaudin/errors.hpp"

#include <sstream>

namespace gaudin {

Mat2 gauge_matrix(Complex u, const ModelParams& params) {
  Mat2 g;
  g(0, 0) = std::exp(-kI * (u + 2.0 * params.lambda1));
  g(0, 1) = std::exp(-kI * (u + 2.0 * params.lambda2));
  g(1, 0) = 1.0;
  g(1, 1) = 1.0;
  return g;
}

Mat2 gauge_matrix_inverse(Complex u, const ModelParams& params) {
  const Mat2 g = gauge_matrix(u, params);
  const Complex det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
  if (std::abs(det) < params.eps_singular_gauge) {
    std::ostringstream msg;
    msg << "gauge matrix singular at u = " << u << " (|det| = " << std::abs(det) << ")";
    throw SingularGaugeError(msg.str());
  }
  Mat2 inv;
  inv << g(1, 1), -g(0, 1), -g(1, 0), g(0, 0);
  return inv / det;
}

Mat2 gauged_sigma(Sign sign, Complex u, const ModelParams& params) {
  const Mat2 s = sign == Sign::plus ? pauli::plus() : pauli::minus();
  return gauge_matrix(u, params) * s * gauge_matrix_inverse(u, params);
}

}  // namespace gaudin
