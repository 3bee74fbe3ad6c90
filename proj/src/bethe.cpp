#include "gaudin/bethe.hpp"

#include "gaudin/errors.hpp"
#include "gaudin/gauge.hpp"
#include "gaudin/parallel.hpp"
#include "gaudin/trig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace gaudin {

Kind kind_from_int(int k) {
  if (k == 1) return Kind::one;
  if (k == 2) return Kind::two;
  throw IndexError("kind must be 1 or 2, got " + std::to_string(k));
}

std::string to_string(Kind kind) { return kind == Kind::one ? "1" : "2"; }

namespace {

Complex lambda_of(Kind kind, const ModelParams& p) {
  return kind == Kind::one ? p.lambda1 : p.lambda2;
}

void check_site(int site, const ModelParams& params) {
  if (site < 1 || site > params.n_sites()) {
    throw IndexError("site " + std::to_string(site) + " out of range 1.." +
                     std::to_string(params.n_sites()));
  }
}

}  // namespace

StateVector vacuum(Kind kind, const ModelParams& params) {
  const Complex lam = lambda_of(kind, params);
  std::vector<Eigen::Vector2cd> spinors;
  for (const Complex zj : params.z) spinors.emplace_back(std::exp(-kI * (zj + 2.0 * lam)), 1.0);
  return product_state(spinors);
}

StateVector dual_vacuum(Kind kind, const ModelParams& params) {
  const Complex s12 = std::sin(params.lambda1 - params.lambda2);
  if (std::abs(s12) < params.eps_singular_gauge) {
    throw SingularGaugeError("dual vacuum: sin(lambda1 - lambda2) vanishes");
  }
  std::vector<Eigen::Vector2cd> rows;
  for (const Complex zj : params.z) {
    const Complex pref = kI * std::exp(-kI * (zj + params.lambda1 + params.lambda2)) / (2.0 * s12);
    if (kind == Kind::one) {
      rows.emplace_back(pref, -pref * std::exp(-kI * (zj + 2.0 * params.lambda2)));
    } else {
      rows.emplace_back(-pref, pref * std::exp(-kI * (zj + 2.0 * params.lambda1)));
    }
  }
  return product_state(rows);
}

Complex vacuum_overlap(const ModelParams& params) {
  Complex out = 1.0;
  for (const Complex zj : params.z) out *= std::exp(-2.0 * kI * (zj + params.lambda1 + params.lambda2));
  return out;
}

Complex coeff_b(Complex u, Complex z_i, const ModelParams& p) {
  const double eps = p.eps_degenerate;
  const Complex num = std::sin(p.lambda1 + p.xi + z_i) * std::sin(p.lambda2 + p.xi - z_i) *
                      std::sin(2.0 * u);
  return num / (guarded_sin(p.lambda1 + p.xi - u, eps, "lambda1 + xi - u") *
                guarded_sin(p.lambda2 + p.xi - u, eps, "lambda2 + xi - u") *
                guarded_sin(u - z_i, eps, "u - z_i") * guarded_sin(u + z_i, eps, "u + z_i"));
}

Complex coeff_c(Complex u, Complex z_i, const ModelParams& p) {
  const double eps = p.eps_degenerate;
  const Complex num = std::sin(p.lambda1 + p.xi - z_i) * std::sin(p.lambda2 + p.xi + z_i) *
                      std::sin(2.0 * u);
  return num / (guarded_sin(p.lambda1 + p.xi + u, eps, "lambda1 + xi + u") *
                guarded_sin(p.lambda2 + p.xi + u, eps, "lambda2 + xi + u") *
                guarded_sin(u - z_i, eps, "u - z_i") * guarded_sin(u + z_i, eps, "u + z_i"));
}

namespace {

enum class Creator { b, c };

LocalOperatorSum creation_operator(Creator which, bool gauged, Complex u, const ModelParams& params) {
  LocalOperatorSum op(params.n_sites());
  const Sign sign = which == Creator::b ? Sign::minus : Sign::plus;
  for (int i = 1; i <= params.n_sites(); ++i) {
    const Complex zi = params.z[i - 1];
    const Complex c = which == Creator::b ? coeff_b(u, zi, params) : coeff_c(u, zi, params);
    const Mat2 s = gauged ? gauged_sigma(sign, zi, params)
                          : (sign == Sign::minus ? pauli::minus() : pauli::plus());
    op.add(i, Mat2(c * s));
  }
  return op;
}

}  // namespace

LocalOperatorSum op_b(Complex u, const ModelParams& params) {
  return creation_operator(Creator::b, true, u, params);
}
LocalOperatorSum op_c(Complex u, const ModelParams& params) {
  return creation_operator(Creator::c, true, u, params);
}
LocalOperatorSum op_tilde_b(Complex u, const ModelParams& params) {
  return creation_operator(Creator::b, false, u, params);
}
LocalOperatorSum op_tilde_c(Complex u, const ModelParams& params) {
  return creation_operator(Creator::c, false, u, params);
}

StateVector bethe_state(Kind kind, const std::vector<Complex>& roots, const ModelParams& params) {
  const double eps = params.eps_degenerate;
  for (std::size_t a = 0; a < roots.size(); ++a) {
    for (std::size_t b = a + 1; b < roots.size(); ++b) {
      if (std::abs(std::sin(roots[a] - roots[b])) < eps ||
          std::abs(std::sin(roots[a] + roots[b])) < eps) {
        throw DegeneracyError("bethe_state: roots " + std::to_string(a + 1) + " and " +
                              std::to_string(b + 1) + " are degenerate");
      }
    }
  }
  StateVector v = vacuum(kind, params);
  for (const Complex u : roots) {
    v = (kind == Kind::one ? op_b(u, params) : op_c(u, params)).apply(v);
  }
  return v;
}

// ---------------------------------------------------------------------------
// Bethe equations as sums of terms w / (sin A sin B) with A, B affine in the roots.

namespace {

struct Affine {
  Complex c;
  int i = -1;
  double ci = 0.0;
  int j = -1;
  double cj = 0.0;

  Complex at(const std::vector<Complex>& v) const {
    Complex out = c;
    if (i >= 0) out += ci * v[static_cast<std::size_t>(i)];
    if (j >= 0) out += cj * v[static_cast<std::size_t>(j)];
    return out;
  }
  double d(int m) const { return (i == m ? ci : 0.0) + (j == m ? cj : 0.0); }
};

struct Term {
  Complex w;
  Affine a, b;
  const char* name;
};

std::vector<Term> equation_terms(Kind kind, int alpha, int m_roots, const ModelParams& p) {
  const Complex w_l1 = kind == Kind::one ? 1.0 - p.delta : 1.0 + p.delta;
  const Complex w_l2 = kind == Kind::one ? 1.0 + p.delta : 1.0 - p.delta;
  std::vector<Term> t;
  t.push_back({w_l1, {p.lambda1 + p.xi, alpha, 1.0}, {p.lambda1 + p.xi, alpha, -1.0},
               "lambda1 + xi +- v"});
  t.push_back({w_l2, {p.lambda2 + p.xi, alpha, 1.0}, {p.lambda2 + p.xi, alpha, -1.0},
               "lambda2 + xi +- v"});
  for (int beta = 0; beta < m_roots; ++beta) {
    if (beta == alpha) continue;
    t.push_back({-2.0, {0.0, alpha, 1.0, beta, -1.0}, {0.0, alpha, 1.0, beta, 1.0}, "v_a +- v_b"});
  }
  for (const Complex zk : p.z) {
    t.push_back({1.0, {-zk, alpha, 1.0}, {zk, alpha, 1.0}, "v +- z_k"});
  }
  return t;
}

struct Evaluated {
  Complex q;   // sin A sin B
  std::vector<Complex> dq;  // d q / d v_m
};

Evaluated evaluate(const Term& t, const std::vector<Complex>& v, bool with_derivative) {
  const Complex a = t.a.at(v), b = t.b.at(v);
  const Complex sa = std::sin(a), sb = std::sin(b);
  Evaluated e{sa * sb, {}};
  if (with_derivative) {
    const Complex ca = std::cos(a), cb = std::cos(b);
    e.dq.resize(v.size());
    for (std::size_t m = 0; m < v.size(); ++m) {
      const int mi = static_cast<int>(m);
      e.dq[m] = ca * t.a.d(mi) * sb + sa * cb * t.b.d(mi);
    }
  }
  return e;
}

void guard_term(const Term& t, const std::vector<Complex>& v, double eps) {
  guarded_sin(t.a.at(v), eps, t.name);
  guarded_sin(t.b.at(v), eps, t.name);
}

}  // namespace

std::vector<Complex> ba_residual(Kind kind, const std::vector<Complex>& roots,
                                 const ModelParams& params) {
  const int m = static_cast<int>(roots.size());
  std::vector<Complex> r(roots.size());
  for (int alpha = 0; alpha < m; ++alpha) {
    Complex sum = 0.0;
    for (const Term& t : equation_terms(kind, alpha, m, params)) {
      guard_term(t, roots, params.eps_degenerate);
      sum += t.w / evaluate(t, roots, false).q;
    }
    r[static_cast<std::size_t>(alpha)] = sum;
  }
  return r;
}

double ba_residual_norm(Kind kind, const std::vector<Complex>& roots, const ModelParams& params) {
  double worst = 0.0;
  for (const Complex r : ba_residual(kind, roots, params)) worst = std::max(worst, std::abs(r));
  return worst;
}

Eigen::MatrixXcd ba_jacobian(Kind kind, const std::vector<Complex>& roots,
                             const ModelParams& params) {
  const int m = static_cast<int>(roots.size());
  Eigen::MatrixXcd jac = Eigen::MatrixXcd::Zero(m, m);
  for (int alpha = 0; alpha < m; ++alpha) {
    for (const Term& t : equation_terms(kind, alpha, m, params)) {
      guard_term(t, roots, params.eps_degenerate);
      const Evaluated e = evaluate(t, roots, true);
      for (int b = 0; b < m; ++b) jac(alpha, b) -= t.w * e.dq[static_cast<std::size_t>(b)] / (e.q * e.q);
    }
  }
  return jac;
}

std::vector<Complex> ba_cleared(Kind kind, const std::vector<Complex>& roots,
                                const ModelParams& params) {
  const int m = static_cast<int>(roots.size());
  std::vector<Complex> out(roots.size());
  for (int alpha = 0; alpha < m; ++alpha) {
    const auto terms = equation_terms(kind, alpha, m, params);
    std::vector<Complex> q;
    for (const Term& t : terms) q.push_back(evaluate(t, roots, false).q);
    Complex sum = 0.0;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      Complex prod = terms[t].w;
      for (std::size_t s = 0; s < terms.size(); ++s)
        if (s != t) prod *= q[s];
      sum += prod;
    }
    out[static_cast<std::size_t>(alpha)] = sum;
  }
  return out;
}

Eigen::MatrixXcd ba_cleared_jacobian(Kind kind, const std::vector<Complex>& roots,
                                     const ModelParams& params) {
  const int m = static_cast<int>(roots.size());
  Eigen::MatrixXcd jac = Eigen::MatrixXcd::Zero(m, m);
  for (int alpha = 0; alpha < m; ++alpha) {
    const auto terms = equation_terms(kind, alpha, m, params);
    const std::size_t n = terms.size();
    std::vector<Evaluated> e;
    for (const Term& t : terms) e.push_back(evaluate(t, roots, true));
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t s = 0; s < n; ++s) {
        if (s == t) continue;
        Complex rest = terms[t].w;
        for (std::size_t r = 0; r < n; ++r)
          if (r != t && r != s) rest *= e[r].q;
        for (int b = 0; b < m; ++b) jac(alpha, b) += rest * e[s].dq[static_cast<std::size_t>(b)];
      }
    }
  }
  return jac;
}

// ---------------------------------------------------------------------------
// Solver.

namespace {

using Residual = std::vector<Complex> (*)(Kind, const std::vector<Complex>&, const ModelParams&);
using Jacobian = Eigen::MatrixXcd (*)(Kind, const std::vector<Complex>&, const ModelParams&);

double max_abs(const std::vector<Complex>& r) {
  double worst = 0.0;
  for (const Complex x : r) worst = std::max(worst, std::abs(x));
  return worst;
}

// Damped Newton. Returns false if a linear solve fails or a pole is hit.
bool damped_newton(Residual f, Jacobian jf, Kind kind, std::vector<Complex>& v,
                   const ModelParams& params, int max_iter, int max_halvings, double stop_norm) {
  const std::size_t m = v.size();
  try {
    std::vector<Complex> r = f(kind, v, params);
    double norm = max_abs(r);
    for (int it = 0; it < max_iter && norm > stop_norm; ++it) {
      const Eigen::MatrixXcd jac = jf(kind, v, params);
      Eigen::VectorXcd rhs(static_cast<Eigen::Index>(m));
      for (std::size_t a = 0; a < m; ++a) rhs(static_cast<Eigen::Index>(a)) = -r[a];
      const Eigen::FullPivLU<Eigen::MatrixXcd> lu(jac);
      if (!lu.isInvertible()) return false;
      const Eigen::VectorXcd step = lu.solve(rhs);
      if (!step.allFinite()) return false;

      bool accepted = false;
      double t = 1.0;
      for (int h = 0; h <= max_halvings; ++h, t /= 2.0) {
        std::vector<Complex> trial(v);
        for (std::size_t a = 0; a < m; ++a) trial[a] += t * step(static_cast<Eigen::Index>(a));
        std::vector<Complex> rt = f(kind, trial, params);
        const double nt = max_abs(rt);
        if (std::isfinite(nt) && nt < norm) {
          v = std::move(trial);
          r = std::move(rt);
          norm = nt;
          accepted = true;
          break;
        }
      }
      if (!accepted) break;
      double scale = 1.0;
      for (const Complex x : v) scale = std::max(scale, std::abs(x));
      if (t * step.cwiseAbs().maxCoeff() < 1e-15 * scale) break;
    }
  } catch (const PoleError&) {
    return false;
  }
  return true;
}

bool admissible(const std::vector<Complex>& v, const ModelParams& p, double max_imag) {
  const double eps = p.eps_degenerate;
  auto ok = [eps](Complex x) { return std::abs(std::sin(x)) >= eps; };
  for (std::size_t a = 0; a < v.size(); ++a) {
    if (std::abs(v[a].imag()) > max_imag) return false;
    if (!ok(2.0 * v[a])) return false;
    if (!ok(p.lambda1 + p.xi - v[a]) || !ok(p.lambda1 + p.xi + v[a])) return false;
    if (!ok(p.lambda2 + p.xi - v[a]) || !ok(p.lambda2 + p.xi + v[a])) return false;
    for (const Complex zk : p.z)
      if (!ok(v[a] - zk) || !ok(v[a] + zk)) return false;
    for (std::size_t b = a + 1; b < v.size(); ++b)
      if (!ok(v[a] - v[b]) || !ok(v[a] + v[b])) return false;
  }
  return true;
}

Complex canonical_root(Complex x) {
  const double pi = std::numbers::pi;
  Complex y(x.real() - pi * std::round(x.real() / pi), x.imag());
  if (y.real() < 0.0 || (y.real() == 0.0 && y.imag() < 0.0)) y = -y;
  return y;
}

bool lex_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

std::vector<Complex> canonical_roots(std::vector<Complex> roots) {
  for (Complex& x : roots) x = canonical_root(x);
  std::sort(roots.begin(), roots.end(), lex_less);
  return roots;
}

double root_set_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  auto root_distance = [](Complex x, Complex y) {
    return std::min(distance_to_pole(x - y), distance_to_pole(x + y));
  };
  std::vector<std::size_t> perm(b.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, root_distance(a[i], b[perm[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

BetheRootSet polish(Kind kind, std::vector<Complex> roots, const ModelParams& params, int steps,
                    double tol) {
  const std::size_t m = roots.size();
  for (int s = 0; s < steps; ++s) {
    const auto r = ba_residual(kind, roots, params);
    Eigen::VectorXcd rhs(static_cast<Eigen::Index>(m));
    for (std::size_t a = 0; a < m; ++a) rhs(static_cast<Eigen::Index>(a)) = -r[a];
    const Eigen::VectorXcd step = ba_jacobian(kind, roots, params).fullPivLu().solve(rhs);
    for (std::size_t a = 0; a < m; ++a) roots[a] += step(static_cast<Eigen::Index>(a));
  }
  BetheRootSet out{kind, std::move(roots), 0.0, false};
  out.residual_norm = ba_residual_norm(kind, out.roots, params);
  out.converged = out.residual_norm < tol;
  return out;
}

SolveResult solve_bethe(Kind kind, const ModelParams& params, const SolverSettings& settings) {
  params.validate_even();
  const std::size_t m = static_cast<std::size_t>(params.n_sites() / 2);
  const auto n_starts = static_cast<std::size_t>(std::max(settings.starts, 0));

  std::mt19937_64 rng(settings.seed);
  std::uniform_real_distribution<double> re(settings.re_min, settings.re_max);
  std::uniform_real_distribution<double> im(settings.im_min, settings.im_max);
  std::vector<std::vector<Complex>> starts(n_starts, std::vector<Complex>(m));
  for (auto& s : starts)
    for (auto& x : s) {
      const double a = re(rng);
      x = Complex(a, im(rng));
    }

  enum class Outcome { failed, imag, degenerate, converged };
  struct Attempt {
    Outcome outcome = Outcome::failed;
    std::vector<Complex> roots;
    double residual = std::numeric_limits<double>::infinity();
  };
  std::vector<Attempt> attempts(n_starts);

  parallel_for(n_starts, [&](std::size_t i) {
    Attempt& at = attempts[i];
    std::vector<Complex> v = starts[i];
    if (!damped_newton(&ba_cleared, &ba_cleared_jacobian, kind, v, params, settings.max_iter,
                       settings.max_halvings, 0.0)) {
      return;
    }
    for (Complex x : v)
      if (std::abs(x.imag()) > settings.max_imag) {
        at.outcome = Outcome::imag;
        return;
      }
    if (!admissible(v, params, settings.max_imag)) {
      at.outcome = Outcome::degenerate;
      return;
    }
    if (!damped_newton(&ba_residual, &ba_jacobian, kind, v, params, settings.max_iter,
                       settings.max_halvings, 0.0)) {
      return;
    }
    if (!admissible(v, params, settings.max_imag)) {
      at.outcome = Outcome::degenerate;
      return;
    }
    try {
      at.residual = ba_residual_norm(kind, v, params);
    } catch (const PoleError&) {
      at.outcome = Outcome::degenerate;
      return;
    }
    at.roots = canonical_roots(std::move(v));
    at.outcome = at.residual < settings.tol ? Outcome::converged : Outcome::failed;
  });

  SolveResult result;
  auto& d = result.diagnostics;
  d.starts = static_cast<int>(n_starts);
  d.best_residual = std::numeric_limits<double>::infinity();
  for (const Attempt& at : attempts) {
    d.best_residual = std::min(d.best_residual, at.residual);
    switch (at.outcome) {
      case Outcome::failed: ++d.failed; break;
      case Outcome::imag: ++d.rejected_imag; break;
      case Outcome::degenerate: ++d.rejected_degenerate; break;
      case Outcome::converged: {
        ++d.converged_starts;
        const bool duplicate = std::any_of(result.sets.begin(), result.sets.end(), [&](const auto& s) {
          return root_set_distance(s.roots, at.roots) < settings.dedup_distance;
        });
        if (!duplicate) result.sets.push_back({kind, at.roots, at.residual, true});
        break;
      }
    }
  }
  std::sort(result.sets.begin(), result.sets.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.roots.begin(), a.roots.end(), b.roots.begin(),
                                        b.roots.end(), lex_less);
  });
  return result;
}

// ---------------------------------------------------------------------------
// Eigenvalues.

Complex eigenvalue(Kind kind, int site, const std::vector<Complex>& roots, const ModelParams& p,
                   EigenvalueReading reading) {
  check_site(site, p);
  const double eps = p.eps_degenerate;
  const Complex zj = p.z[static_cast<std::size_t>(site - 1)];
  auto cot = [eps](Complex x, const char* what) { return std::cos(x) / guarded_sin(x, eps, what); };

  Complex e = cot(2.0 * zj, "2 z_j");
  if (reading == EigenvalueReading::lambda_sum) {
    e += cot(p.lambda1 + p.xi - zj, "lambda1 + xi - z_j");
    e += cot(p.lambda2 + p.xi - zj, "lambda2 + xi - z_j");
  } else {
    if (p.n_sites() < 2) throw IndexError("literal eigenvalue reading needs N >= 2");
    e += cot(p.lambda1 + p.xi - p.z[0], "lambda1 + xi - z_1");
    e += cot(p.lambda2 + p.xi - p.z[1], "lambda2 + xi - z_2");
  }
  const Complex lam = lambda_of(kind, p);
  const Complex s2z = std::sin(2.0 * zj);
  e -= p.delta * s2z /
       (guarded_sin(lam + p.xi - zj, eps, "lambda_k + xi - z_j") *
        guarded_sin(lam + p.xi + zj, eps, "lambda_k + xi + z_j"));
  for (const Complex v : roots) {
    e += s2z / (guarded_sin(v - zj, eps, "v_m - z_j") * guarded_sin(v + zj, eps, "v_m + z_j"));
  }
  return e;
}

std::vector<EigenRecord> eigen_check(Kind kind, const std::vector<Complex>& roots,
                                     const ModelParams& params, const RichardsonSettings& settings,
                                     EigenvalueReading reading) {
  params.validate();
  const StateVector v = bethe_state(kind, roots, params);
  const double norm = v.norm();
  if (!(norm > 1e-10)) {
    std::ostringstream msg;
    msg << "eigen_check: Bethe state norm " << norm << " is numerically zero";
    throw DegenerateStateError(msg.str());
  }
  std::vector<EigenRecord> out(static_cast<std::size_t>(params.n_sites()));
  parallel_for(out.size(), [&](std::size_t i) {
    const int site = static_cast<int>(i) + 1;
    const StateVector hv = hamiltonian_terms(site, params, settings).apply(v);
    EigenRecord& rec = out[i];
    rec.site = site;
    rec.kind = kind;
    rec.value = eigenvalue(kind, site, roots, params, reading);
    rec.rayleigh = v.dot(hv) / (norm * norm);
    rec.eigen_residual = (hv - rec.value * v).norm() / norm;
    rec.rayleigh_residual = (hv - rec.rayleigh * v).norm() / norm;
    rec.shift = rec.rayleigh - rec.value;
  });
  return out;
}

}  // namespace gaudin
