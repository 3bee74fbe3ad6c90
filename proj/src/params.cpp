#include "gaudin/params.hpp"

#include "gaudin/errors.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace gaudin {

ModelParams ModelParams::with_eta(Complex eta_value) const {
  ModelParams out = *this;
  out.eta = eta_value;
  return out;
}

ModelParams ModelParams::with_z(std::vector<Complex> sites) const {
  ModelParams out = *this;
  out.z = std::move(sites);
  return out;
}

void ModelParams::validate() const {
  const int n = n_sites();
  if (n < 1 || n > kMaxSites) {
    throw IndexError("ModelParams: site count " + std::to_string(n) + " outside 1.." +
                     std::to_string(kMaxSites));
  }
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      if (std::abs(std::sin(z[j] - z[k])) < eps_degenerate ||
          std::abs(std::sin(z[j] + z[k])) < eps_degenerate) {
        throw DegeneracyError("ModelParams: inhomogeneities z_" + std::to_string(j + 1) +
                              " and z_" + std::to_string(k + 1) + " are degenerate");
      }
    }
  }
  if (std::abs(std::sin(lambda1 - lambda2)) < eps_singular_gauge) {
    throw SingularGaugeError("ModelParams: lambda1 == lambda2 mod pi");
  }
}

void ModelParams::validate_even() const {
  validate();
  if (n_sites() % 2 != 0) {
    throw IndexError("ModelParams: N = " + std::to_string(n_sites()) + " must be even");
  }
}

namespace {

void append(std::string& out, Complex c) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g;", c.real(), c.imag());
  out += buf;
}

}  // namespace

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

std::uint64_t ModelParams::hash() const {
  std::string text;
  for (Complex c : {lambda1, lambda2, xi, delta, eta}) append(text, c);
  text += "z:";
  for (Complex c : z) append(text, c);
  char buf[64];
  std::snprintf(buf, sizeof buf, "eps:%.17g,%.17g", eps_degenerate, eps_singular_gauge);
  text += buf;
  return fnv1a(text);
}

std::string ModelParams::hash_hex() const { return hex64(hash()); }

ModelParams desk_instance() {
  ModelParams p;
  p.lambda1 = 0.3;
  p.lambda2 = 0.7;
  p.xi = 0.5;
  p.delta = 0.2;
  p.eta = 0.1;
  p.z = {0.11, 0.23};
  return p;
}

}  // namespace gaudin
