#include "gaudin/scalar_products.hpp"

#include "gaudin/errors.hpp"
#include "gaudin/numerics.hpp"
#include "gaudin/trig.hpp"

#include <algorithm>
#include <bit>

namespace gaudin {

std::string to_string(Method m) {
  switch (m) {
    case Method::determinant: return "determinant";
    case Method::bruteforce: return "bruteforce";
    case Method::recursion: return "recursion";
  }
  return "unknown";
}

namespace {

void check_pairwise(const std::vector<Complex>& xs, double eps, const std::string& what) {
  for (std::size_t a = 0; a < xs.size(); ++a) {
    for (std::size_t b = a + 1; b < xs.size(); ++b) {
      if (std::abs(std::sin(xs[a] - xs[b])) < eps || std::abs(std::sin(xs[a] + xs[b])) < eps) {
        throw DegeneracyError(what + ": entries " + std::to_string(a + 1) + " and " +
                              std::to_string(b + 1) + " are degenerate under sin(a +- b)");
      }
    }
  }
}

void check_disjoint(const std::vector<Complex>& us, const std::vector<Complex>& vs, double eps) {
  for (std::size_t a = 0; a < us.size(); ++a) {
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (std::abs(std::sin(us[a] - vs[j])) < eps || std::abs(std::sin(us[a] + vs[j])) < eps) {
        throw DegeneracyError("u_" + std::to_string(a + 1) + " coincides with root v_" +
                              std::to_string(j + 1));
      }
    }
  }
}

void check_dimension(const ModelParams& params) {
  if (params.n_sites() > kMaxSites) {
    throw DimensionCapError("brute force needs N <= " + std::to_string(kMaxSites) + ", got " +
                            std::to_string(params.n_sites()));
  }
}

// prod_{a < b} sin(x_a - x_b) sin(x_a + x_b)
Complex pair_product(const std::vector<Complex>& xs) {
  Complex out = 1.0;
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = a + 1; b < xs.size(); ++b) out *= std::sin(xs[a] - xs[b]) * std::sin(xs[a] + xs[b]);
  return out;
}

Complex component(const StateVector& v, std::size_t index) {
  return v(static_cast<Eigen::Index>(index));
}

}  // namespace

Eigen::MatrixXcd partition_matrix(Kind kind, const std::vector<Complex>& ubar,
                                  const ModelParams& p) {
  const int n = static_cast<int>(ubar.size());
  if (n != p.n_sites()) {
    throw IndexError("partition function needs N = " + std::to_string(p.n_sites()) +
                     " spectral parameters, got " + std::to_string(n));
  }
  const double eps = p.eps_degenerate;
  Eigen::MatrixXcd m(n, n);
  for (int a = 0; a < n; ++a) {
    const Complex u = ubar[static_cast<std::size_t>(a)];
    for (int j = 0; j < n; ++j) {
      const Complex z = p.z[static_cast<std::size_t>(j)];
      const Complex smz = guarded_sin(u - z, eps, "ubar - z");
      const Complex spz = guarded_sin(u + z, eps, "ubar + z");
      if (kind == Kind::one) {
        m(a, j) = std::sin(p.lambda1 + p.xi - z) * std::sin(p.lambda2 + p.xi + z) * std::sin(2.0 * u) /
                  (guarded_sin(p.lambda1 + p.xi + u, eps, "lambda1 + xi + ubar") *
                   guarded_sin(p.lambda2 + p.xi + u, eps, "lambda2 + xi + ubar") * smz * smz * spz * spz);
      } else {
        m(a, j) = std::sin(p.lambda1 + p.xi + z) * std::sin(p.lambda2 + p.xi - z) * std::sin(2.0 * u) /
                  (guarded_sin(p.lambda1 + p.xi - u, eps, "lambda1 + xi - ubar") *
                   guarded_sin(p.lambda2 + p.xi - u, eps, "lambda2 + xi - ubar") * smz * smz * spz * spz);
      }
    }
  }
  return m;
}

ScalarProductResult partition_det(Kind kind, const std::vector<Complex>& ubar,
                                  const ModelParams& params) {
  params.validate();
  check_pairwise(ubar, params.eps_degenerate, "partition function spectral parameters");
  const Eigen::MatrixXcd m = partition_matrix(kind, ubar, params);
  const Determinant det = lu_determinant(m);
  Complex num = det.value;
  for (const Complex u : ubar)
    for (const Complex z : params.z) num *= std::sin(u + z) * std::sin(u - z);
  // prod_{alpha > beta} sin(u_alpha - u_beta) = (-1)^{#pairs} prod_{alpha < beta} sin(u_alpha - u_beta)
  const std::size_t pairs = ubar.size() * (ubar.size() - 1) / 2;
  const double sign = pairs % 2 == 0 ? 1.0 : -1.0;
  return {num / (sign * pair_product(ubar) * pair_product(params.z)), Method::determinant,
          det.condition};
}

ScalarProductResult partition_recursive(Kind kind, const std::vector<Complex>& ubar,
                                        const ModelParams& params) {
  params.validate();
  const int n = params.n_sites();
  if (static_cast<int>(ubar.size()) != n) {
    throw IndexError("partition function needs N = " + std::to_string(n) +
                     " spectral parameters, got " + std::to_string(ubar.size()));
  }
  // coeff[a][i]: weight of flipping site i with ubar_a.
  std::vector<std::vector<Complex>> coeff(ubar.size(), std::vector<Complex>(static_cast<std::size_t>(n)));
  for (std::size_t a = 0; a < ubar.size(); ++a)
    for (int i = 0; i < n; ++i) {
      const Complex z = params.z[static_cast<std::size_t>(i)];
      coeff[a][static_cast<std::size_t>(i)] =
          kind == Kind::one ? coeff_c(ubar[a], z, params) : coeff_b(ubar[a], z, params);
    }
  // value[mask] = Z_{|mask|}(ubar_1..ubar_|mask|; z restricted to mask)
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<Complex> value(full + 1, 0.0);
  value[0] = 1.0;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    const auto depth = static_cast<std::size_t>(std::popcount(mask));
    Complex sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      if (mask & bit) sum += coeff[depth - 1][static_cast<std::size_t>(i)] * value[mask & ~bit];
    }
    value[mask] = sum;
  }
  return {value[full], Method::recursion, 1.0};
}

ScalarProductResult partition_bruteforce(Kind kind, const std::vector<Complex>& ubar,
                                         const ModelParams& params) {
  check_dimension(params);
  params.validate();
  const int n = params.n_sites();
  StateVector v = kind == Kind::one ? all_down(n) : all_up(n);
  for (const Complex u : ubar) {
    v = (kind == Kind::one ? op_tilde_c(u, params) : op_tilde_b(u, params)).apply(v);
  }
  const std::size_t target = kind == Kind::one ? 0 : hilbert_dim(n) - 1;
  return {component(v, target), Method::bruteforce, 1.0};
}

namespace {

std::vector<Complex> concat(const std::vector<Complex>& u, const std::vector<Complex>& v) {
  std::vector<Complex> out(u);
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace

ScalarProductResult s12(const std::vector<Complex>& u, const std::vector<Complex>& v,
                        const ModelParams& params) {
  return partition_det(Kind::one, concat(u, v), params);
}

ScalarProductResult s21(const std::vector<Complex>& u, const std::vector<Complex>& v,
                        const ModelParams& params) {
  return partition_det(Kind::two, concat(u, v), params);
}

namespace {

Complex f_factor_unchecked(Kind kind, std::size_t j, Complex u, const std::vector<Complex>& v,
                           const ModelParams& p) {
  const double eps = p.eps_degenerate;
  const Complex a1 = p.lambda1 + p.xi, a2 = p.lambda2 + p.xi;
  Complex pre = kind == Kind::one ? std::sin(a1 - u) * std::sin(a2 - u) : std::sin(a1 + u) * std::sin(a2 + u);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k != j) pre *= std::sin(v[k] - u) * std::sin(v[k] + u);
  }
  pre /= guarded_sin(v[j] - u, eps, "v_j - u") * guarded_sin(v[j] + u, eps, "v_j + u");

  const Complex w1 = kind == Kind::one ? 1.0 - p.delta : 1.0 + p.delta;
  const Complex w2 = kind == Kind::one ? 1.0 + p.delta : 1.0 - p.delta;
  Complex bracket = w1 / (guarded_sin(a1 + u, eps, "lambda1 + xi + u") * guarded_sin(a1 - u, eps, "lambda1 + xi - u")) +
                    w2 / (guarded_sin(a2 + u, eps, "lambda2 + xi + u") * guarded_sin(a2 - u, eps, "lambda2 + xi - u"));
  for (const Complex zk : p.z) {
    bracket += 1.0 / (guarded_sin(u - zk, eps, "u - z_k") * guarded_sin(u + zk, eps, "u + z_k"));
  }
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k == j) continue;
    bracket -= 2.0 / (guarded_sin(u - v[k], eps, "u - v_k") * guarded_sin(u + v[k], eps, "u + v_k"));
  }
  return pre * bracket;
}

void require_on_shell(Kind kind, const std::vector<Complex>& roots, const ModelParams& params,
                      double tol) {
  const double res = ba_residual_norm(kind, roots, params);
  if (!(res < tol)) {
    throw OnShellRequiredError("roots are off shell: Bethe residual " + std::to_string(res) +
                               " >= " + std::to_string(tol));
  }
}

}  // namespace

Complex f_factor(Kind kind, int j, Complex u, const std::vector<Complex>& roots,
                 const ModelParams& params) {
  if (j < 1 || j > static_cast<int>(roots.size())) {
    throw IndexError("f_factor: root index " + std::to_string(j) + " out of range");
  }
  require_on_shell(kind, roots, params, kDefaultTolOnShell);
  return f_factor_unchecked(kind, static_cast<std::size_t>(j - 1), u, roots, params);
}

Eigen::MatrixXcd scalar_matrix(Kind kind, const std::vector<Complex>& u,
                               const std::vector<Complex>& roots, const ModelParams& p) {
  if (u.size() != roots.size()) throw IndexError("scalar product needs as many u as roots");
  const double eps = p.eps_degenerate;
  const auto m = static_cast<Eigen::Index>(u.size());
  const double sg = kind == Kind::one ? -1.0 : 1.0;
  Eigen::MatrixXcd out(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    const Complex ua = u[static_cast<std::size_t>(a)];
    for (Eigen::Index j = 0; j < m; ++j) {
      const Complex vj = roots[static_cast<std::size_t>(j)];
      out(a, j) = std::sin(2.0 * vj) * std::sin(2.0 * ua) *
                  f_factor_unchecked(kind, static_cast<std::size_t>(j), ua, roots, p) /
                  (guarded_sin(p.lambda2 + p.xi + sg * vj, eps, "lambda2 + xi -+ v_j") *
                   guarded_sin(p.lambda1 + p.xi + sg * vj, eps, "lambda1 + xi -+ v_j"));
    }
  }
  return out;
}

ScalarProductResult s_kk_det(Kind kind, const std::vector<Complex>& u,
                             const std::vector<Complex>& roots, const ModelParams& params,
                             ShellPolicy policy, double tol_onshell) {
  params.validate();
  const double eps = params.eps_degenerate;
  check_pairwise(u, eps, "u");
  check_pairwise(roots, eps, "roots");
  check_disjoint(u, roots, eps);
  if (policy == ShellPolicy::require) require_on_shell(kind, roots, params, tol_onshell);
  const Determinant det = lu_determinant(scalar_matrix(kind, u, roots, params));
  const std::size_t pairs = roots.size() * (roots.size() - 1) / 2;
  const double sign = pairs % 2 == 0 ? 1.0 : -1.0;
  return {det.value / (pair_product(u) * sign * pair_product(roots)), Method::determinant,
          det.condition};
}

ScalarProductResult s_kk_bruteforce(Kind kind, const std::vector<Complex>& u,
                                    const std::vector<Complex>& roots, const ModelParams& params) {
  check_dimension(params);
  params.validate();
  const int n = params.n_sites();
  StateVector v = kind == Kind::one ? all_up(n) : all_down(n);
  for (const Complex x : roots)
    v = (kind == Kind::one ? op_tilde_b(x, params) : op_tilde_c(x, params)).apply(v);
  for (const Complex x : u)
    v = (kind == Kind::one ? op_tilde_c(x, params) : op_tilde_b(x, params)).apply(v);
  const std::size_t target = kind == Kind::one ? 0 : hilbert_dim(n) - 1;
  return {component(v, target), Method::bruteforce, 1.0};
}

ScalarProductResult s_kk_bruteforce_gauged(Kind kind, const std::vector<Complex>& u,
                                           const std::vector<Complex>& roots,
                                           const ModelParams& params) {
  check_dimension(params);
  params.validate();
  StateVector v = bethe_state(kind, roots, params);
  for (const Complex x : u) v = (kind == Kind::one ? op_c(x, params) : op_b(x, params)).apply(v);
  return {contract(dual_vacuum(kind, params), v), Method::bruteforce, 1.0};
}

namespace {

void check_sites(const std::vector<int>& sites, int n) {
  for (std::size_t a = 0; a < sites.size(); ++a) {
    if (sites[a] < 1 || sites[a] > n) {
      throw IndexError("site " + std::to_string(sites[a]) + " out of range 1.." + std::to_string(n));
    }
    for (std::size_t b = a + 1; b < sites.size(); ++b)
      if (sites[a] == sites[b]) throw IndexError("site " + std::to_string(sites[a]) + " repeated");
  }
}

}  // namespace

Complex intermediate_g(const std::vector<Complex>& u_prefix, const std::vector<int>& down_sites,
                       const std::vector<Complex>& roots, const ModelParams& params) {
  check_dimension(params);
  params.validate();
  const int n = params.n_sites();
  check_sites(down_sites, n);
  if (u_prefix.size() + down_sites.size() != roots.size()) {
    throw IndexError("intermediate_g: need i + |sites| = M");
  }
  StateVector v = all_up(n);
  for (const Complex x : roots) v = op_tilde_b(x, params).apply(v);
  for (const Complex x : u_prefix) v = op_tilde_c(x, params).apply(v);
  return component(v, basis_index(down_sites, n));
}

Complex intermediate_g_recursive(const std::vector<Complex>& u_prefix,
                                 const std::vector<int>& down_sites,
                                 const std::vector<Complex>& roots, const ModelParams& params) {
  if (u_prefix.empty()) return intermediate_g(u_prefix, down_sites, roots, params);
  const int n = params.n_sites();
  check_sites(down_sites, n);
  const std::vector<Complex> shorter(u_prefix.begin(), u_prefix.end() - 1);
  const Complex ui = u_prefix.back();
  Complex sum = 0.0;
  for (int j = 1; j <= n; ++j) {
    if (std::find(down_sites.begin(), down_sites.end(), j) != down_sites.end()) continue;
    std::vector<int> sites{j};
    sites.insert(sites.end(), down_sites.begin(), down_sites.end());
    sum += coeff_c(ui, params.z[static_cast<std::size_t>(j - 1)], params) *
           intermediate_g(shorter, sites, roots, params);
  }
  return sum;
}

}  // namespace gaudin
