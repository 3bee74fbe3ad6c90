#pragma once

#include <stdexcept>
#include <string>

namespace gaudin {

// Base of every error raised by the library. Callers that only care about
// "something went wrong numerically" can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

// A trigonometric denominator came within eps_degenerate of zero.
class PoleError : public Error {
 public:
  using Error::Error;
};

// Two spectral parameters (or inhomogeneities) coincide under sin(a +- b).
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

class SingularGaugeError : public Error {
 public:
  using Error::Error;
};

// Richardson extrapolants disagree beyond tolerance.
class NumericalDerivativeError : public Error {
 public:
  using Error::Error;
};

class OnShellRequiredError : public Error {
 public:
  using Error::Error;
};

class DimensionCapError : public Error {
 public:
  using Error::Error;
};

class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace gaudin
