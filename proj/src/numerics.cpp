#include "gaudin/numerics.hpp"

#include <Eigen/LU>

#include <limits>

namespace gaudin {

Determinant lu_determinant(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw IndexError("lu_determinant: matrix is not square");
  if (m.rows() == 0) return {Complex{1.0}, 1.0};
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m);
  const double rcond = lu.rcond();
  Determinant d;
  d.value = lu.determinant();
  d.condition = rcond > 0.0 ? std::max(1.0, 1.0 / rcond) : std::numeric_limits<double>::infinity();
  return d;
}

}  // namespace gaudin
