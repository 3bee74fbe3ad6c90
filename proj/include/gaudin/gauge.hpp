#pragma once

#include "gaudin/params.hpp"
#include "gaudin/tensor.hpp"

namespace gaudin {

enum class Sign { plus, minus };

// g(u) = [[e^{-i(u+2 lambda1)}, e^{-i(u+2 lambda2)}], [1, 1]].
// Columns are the local vacuum spinors of kind 1 and kind 2.
Mat2 gauge_matrix(Complex u, const ModelParams& params);

Mat2 gauge_matrix_inverse(Complex u, const ModelParams& params);

// sigma^{+-}(u) = g(u) sigma^{+-} g(u)^{-1}.
Mat2 gauged_sigma(Sign sign, Complex u, const ModelParams& params);

}  // namespace gaudin
