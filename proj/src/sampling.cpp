#include "gaudin/sampling.hpp"

#include "gaudin/errors.hpp"

#include <cmath>

namespace gaudin {

namespace {

constexpr int kMaxRedraws = 10000;

bool far(Complex x, double margin) { return std::abs(std::sin(x)) >= margin; }

}  // namespace

double Sampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

ModelParams Sampler::model(int n_sites, Complex eta, double margin) {
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    ModelParams p;
    p.lambda1 = uniform();
    p.lambda2 = uniform();
    p.xi = uniform();
    p.delta = uniform();
    p.eta = eta;
    p.z.clear();
    for (int j = 0; j < n_sites; ++j) p.z.emplace_back(uniform());

    bool ok = far(p.lambda1 - p.lambda2, margin);
    for (std::size_t j = 0; ok && j < p.z.size(); ++j) {
      const Complex zj = p.z[j];
      ok = far(2.0 * zj, margin);
      for (const Complex a : {p.lambda1 + p.xi, p.lambda2 + p.xi}) ok = ok && far(a + zj, margin) && far(a - zj, margin);
      for (std::size_t k = j + 1; ok && k < p.z.size(); ++k) ok = far(zj - p.z[k], margin) && far(zj + p.z[k], margin);
    }
    if (ok) return p;
  }
  throw DegeneracyError("Sampler: could not draw a non-degenerate model");
}

std::vector<Complex> Sampler::spectral(int count, const ModelParams& p, double margin,
                                       const std::vector<Complex>& avoid) {
  std::vector<Complex> out;
  std::vector<Complex> taken(avoid);
  taken.insert(taken.end(), p.z.begin(), p.z.end());
  for (int i = 0; i < count; ++i) {
    for (int attempt = 0;; ++attempt) {
      if (attempt == kMaxRedraws) throw DegeneracyError("Sampler: could not draw a spectral parameter");
      const Complex u = uniform();
      bool ok = far(2.0 * u, margin);
      for (const Complex a : {p.lambda1 + p.xi, p.lambda2 + p.xi}) ok = ok && far(a + u, margin) && far(a - u, margin);
      for (const Complex t : taken) ok = ok && far(u - t, margin) && far(u + t, margin);
      if (ok) {
        out.push_back(u);
        taken.push_back(u);
        break;
      }
    }
  }
  return out;
}

}  // namespace gaudin
