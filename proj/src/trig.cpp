#include "gaudin/trig.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace gaudin {

Complex guarded_sin(Complex x, double eps, std::string_view what) {
  const Complex s = std::sin(x);
  if (!(std::abs(s) >= eps)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "pole: |sin(" << what << ")| < " << eps << " at argument " << x;
    throw PoleError(msg.str());
  }
  return s;
}

double distance_to_pole(Complex x) {
  const double pi = std::numbers::pi;
  const double re = x.real() - pi * std::round(x.real() / pi);
  return std::hypot(re, x.imag());
}

}  // namespace gaudin
