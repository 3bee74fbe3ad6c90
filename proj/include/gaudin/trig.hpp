#pragma once

#include "gaudin/errors.hpp"
#include "gaudin/tensor.hpp"

#include <string_view>

namespace gaudin {

// std::sin / std::cos on std::complex use the principal branch of the
// exponential definition, which is what every formula here expects.
inline Complex csin(Complex x) { return std::sin(x); }
inline Complex ccos(Complex x) { return std::cos(x); }

// sin(x), raising PoleError when |sin(x)| < eps. `what` names the factor.
Complex guarded_sin(Complex x, double eps, std::string_view what);

// Distance from x to the nearest multiple of pi, measured on the real axis
// and combined with the imaginary part.
double distance_to_pole(Complex x);

}  // namespace gaudin
