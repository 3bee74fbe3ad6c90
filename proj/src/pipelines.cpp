#include "gaudin/pipelines.hpp"

#include "gaudin/errors.hpp"
#include "gaudin/hamiltonians.hpp"
#include "gaudin/parallel.hpp"
#include "gaudin/sampling.hpp"
#include "gaudin/scalar_products.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

namespace gaudin {

namespace {

using Json = nlohmann::ordered_json;
using Task = std::function<CheckRecord()>;

std::string describe(const std::vector<Complex>& xs) {
  std::string out;
  char buf[64];
  for (const Complex x : xs) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g;", x.real(), x.imag());
    out += buf;
  }
  return out;
}

std::string describe(const ModelParams& p, const std::vector<Complex>& xs = {}) {
  return p.hash_hex() + "|" + describe(xs);
}

Json complex_list(const std::vector<Complex>& xs) {
  Json arr = Json::array();
  for (const Complex x : xs) arr.push_back(complex_json(x));
  return arr;
}

std::string pad(std::size_t i, int width = 3) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%0*zu", width, i);
  return buf;
}

class Suite {
 public:
  Suite(const RunConfig& config, std::string name) : config_(config), name_(std::move(name)) {}

  CheckRecord record(std::string id, const ModelParams& params, const std::string& inputs,
                     double measured, double tolerance, double condition = 1.0,
                     Json detail = Json::object()) const {
    CheckRecord r;
    r.suite = name_;
    r.check_id = std::move(id);
    r.inputs_digest = inputs_digest(inputs);
    r.measured = measured;
    r.tolerance = tolerance;
    r.verdict = judge(measured, tolerance, condition);
    r.seed = config_.rng_seed;
    r.params_hash = params.hash_hex();
    if (condition != 1.0) detail["condition_estimate"] = condition;
    r.detail = std::move(detail);
    return r;
  }

  void add(Task task) { tasks_.push_back(std::move(task)); }

  // Runs every task on the pool; a library error inside a task becomes a
  // failing record carrying the message.
  void run_into(Report& report) {
    std::vector<CheckRecord> out(tasks_.size());
    const bool timing = config_.output.timing;
    parallel_for(tasks_.size(), [&](std::size_t i) {
      const auto start = std::chrono::steady_clock::now();
      try {
        out[i] = tasks_[i]();
      } catch (const Error& e) {
        out[i].suite = name_;
        out[i].check_id = "task-" + pad(i) + "/error";
        out[i].measured = std::numeric_limits<double>::infinity();
        out[i].verdict = Verdict::fail;
        out[i].seed = config_.rng_seed;
        out[i].detail = Json{{"error", e.what()}};
      }
      if (timing) {
        out[i].wall_time_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      }
    });
    for (auto& r : out) report.add(std::move(r));
    tasks_.clear();
  }

 private:
  const RunConfig& config_;
  std::string name_;
  std::vector<Task> tasks_;
};

// Least-squares slope of log y against log x.
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ModelParams with_eps(ModelParams p, const RunConfig& config) {
  p.eps_degenerate = config.tolerances.eps_degenerate;
  return p;
}

}  // namespace

// ---------------------------------------------------------------------------

Report run_check_algebra(const RunConfig& config, const RMatrixFn& r) {
  config.validate();
  const Tolerances& tol = config.tolerances;
  Sampler sampler(config.rng_seed);
  Report report;
  const auto draws = static_cast<std::size_t>(config.checks.algebra_draws);
  // The identities are checked in absolute Frobenius norm, and round-off in
  // products of K-matrices grows like the square of their entries, so these
  // draws keep every R and K denominator at least kIdentityMargin from zero.
  constexpr double kIdentityMargin = 0.2;
  auto far = [](Complex x) { return std::abs(std::sin(x)) >= kIdentityMargin; };

  if (config.suites.qybe) {
    Suite s(config, "qybe");
    for (std::size_t d = 0; d < draws; ++d) {
      Complex u1, u2, u3, eta;
      do {
        u1 = sampler.uniform();
        u2 = sampler.uniform();
        u3 = sampler.uniform();
        eta = sampler.uniform();
      } while (!far(u1 - u2 + eta) || !far(u1 - u3 + eta) || !far(u2 - u3 + eta));
      ModelParams p = config.model;
      p.eta = eta;
      s.add([=, &s] {
        const double res = check_qybe(u1, u2, u3, eta, r);
        return s.record("draw-" + pad(d), p, describe(std::vector<Complex>{u1, u2, u3, eta}), res, tol.tol_identity, 1.0,
                        Json{{"u", complex_list({u1, u2, u3})}, {"eta", complex_json(eta)}});
      });
    }
    s.run_into(report);
  }

  if (config.suites.unitarity) {
    Suite s(config, "unitarity");
    for (std::size_t d = 0; d < draws; ++d) {
      Complex u, eta;
      do {
        u = sampler.uniform();
        eta = sampler.uniform();
      } while (!far(u + eta) || !far(-u + eta));
      ModelParams p = config.model;
      p.eta = eta;
      s.add([=, &s] {
        return s.record("draw-" + pad(d), p, describe(std::vector<Complex>{u, eta}), check_unitarity(u, eta, r),
                        tol.tol_identity, 1.0, Json{{"u", complex_json(u)}, {"eta", complex_json(eta)}});
      });
    }
    s.run_into(report);
  }

  // Reflection equations: model and spectral parameters drawn together and
  // rejected near any K or R pole.
  auto reflection_draw = [&](bool dual) {
    for (;;) {
      ModelParams p = with_eps(sampler.model(1, sampler.uniform()), config);
      const Complex u1 = sampler.uniform(), u2 = sampler.uniform();
      const Complex eta = p.eta, xb = p.xi_bar();
      bool ok = far(u1 - u2 + eta) && far(u1 + u2 + eta) && far(u2 - u1 + eta);
      for (const Complex l : {p.lambda1, p.lambda2}) {
        for (const Complex u : {u1, u2}) {
          ok = ok && (dual ? far(l + xb - u - eta) : far(l + p.xi + u));
        }
      }
      if (dual) ok = ok && far(-u1 - u2 - eta);
      if (ok) return std::tuple{p, u1, u2};
    }
  };

  if (config.suites.re) {
    Suite s(config, "re");
    for (std::size_t d = 0; d < draws; ++d) {
      const auto [p, u1, u2] = reflection_draw(false);
      s.add([=, &s] {
        const double scale = k_minus(u1, p).norm() * k_minus(u2, p).norm();
        return s.record("draw-" + pad(d), p, describe(p, {u1, u2}), check_re(u1, u2, p),
                        tol.tol_identity, 1.0,
                        Json{{"u", complex_list({u1, u2})}, {"k_norm_product", scale}});
      });
    }
    s.run_into(report);
  }

  if (config.suites.dual_re) {
    Suite s(config, "dual_re");
    for (std::size_t d = 0; d < draws; ++d) {
      const auto [p, u1, u2] = reflection_draw(true);
      s.add([=, &s] {
        const double scale = k_plus(u1, p).norm() * k_plus(u2, p).norm();
        return s.record("draw-" + pad(d), p, describe(p, {u1, u2}), check_dual_re(u1, u2, p),
                        tol.tol_identity, 1.0,
                        Json{{"u", complex_list({u1, u2})}, {"k_norm_product", scale}});
      });
    }
    s.run_into(report);
  }

  if (config.suites.classical_limit) {
    Suite s(config, "classical_limit");
    for (std::size_t d = 0; d < static_cast<std::size_t>(config.checks.classical_draws); ++d) {
      const ModelParams p = with_eps(sampler.model(1, 0.0), config);
      const Complex u = sampler.spectral(1, p)[0];
      s.add([=, &s] {
        std::vector<double> etas{1e-2, 1e-3, 1e-4}, norms;
        for (const double e : etas) {
          norms.push_back((k_plus(u, p.with_eta(e)) * k_minus(u, p) - Mat2::Identity()).norm());
        }
        const double slope = log_log_slope(etas, norms);
        return s.record("draw-" + pad(d), p, describe(p, {u}), std::abs(slope - 1.0), tol.tol_slope,
                        1.0, Json{{"u", complex_json(u)}, {"eta", etas}, {"norm", norms}, {"slope", slope}});
      });
    }
    s.run_into(report);
  }

  if (config.suites.transfer_commutativity) {
    Suite s(config, "transfer_commutativity");
    for (const int n : config.checks.transfer_sizes) {
      for (std::size_t d = 0; d < 3; ++d) {
        const ModelParams p = with_eps(sampler.model(n, sampler.uniform(0.05, 0.5)), config);
        const auto uw = sampler.spectral(2, p);
        s.add([=, &s] {
          const Operator a = transfer(uw[0], p), b = transfer(uw[1], p);
          const double rel = (a * b - b * a).norm() / (a.norm() * b.norm());
          return s.record("N=" + std::to_string(n) + "/draw-" + pad(d), p, describe(p, uw), rel,
                          tol.tol_transfer, 1.0, Json{{"u", complex_list(uw)}, {"eta", complex_json(p.eta)}});
        });
      }
    }
    s.run_into(report);
  }

  if (config.suites.gaudin) {
    Suite s(config, "gaudin");
    std::vector<std::pair<std::string, ModelParams>> instances;
    for (const int n : config.checks.gaudin_sizes) {
      for (std::size_t d = 0; d < static_cast<std::size_t>(config.checks.gaudin_draws); ++d) {
        instances.emplace_back("N=" + std::to_string(n) + "/draw-" + pad(d),
                               with_eps(sampler.model(n, 0.0), config));
      }
    }
    instances.emplace_back("model/N=" + std::to_string(config.model.n_sites()), config.model);
    const RichardsonSettings rs = tol.richardson();
    for (const auto& [tag, p] : instances) {
      for (int site = 1; site <= p.n_sites(); ++site) {
        s.add([=, &s] {
          const Operator direct = hamiltonian_direct(site, p, rs);
          const RichardsonResult tr = hamiltonian_from_transfer(site, p, rs);
          const ConstructionComparison c = compare_constructions(direct, tr.value);
          const ConstructionComparison printed =
              compare_constructions(hamiltonian_direct(site, p, rs, HamiltonianReading::as_printed), tr.value);
          return s.record(tag + "/site-" + std::to_string(site) + "/direct-vs-transfer", p,
                          describe(p), c.relative_distance, tol.tol_gaudin, 1.0,
                          Json{{"identity_shift", complex_json(c.identity_shift)},
                               {"relative_after_shift", c.relative_after_shift},
                               {"richardson_disagreement", tr.disagreement},
                               {"as_printed_relative_distance", printed.relative_distance}});
        });
      }
      s.add([=, &s] {
        const GaudinSet set = build_gaudin_set(p, rs);
        return s.record(tag + "/commutators", p, describe(p), max_relative_commutator(set.hams),
                        tol.tol_commutator);
      });
    }
    s.run_into(report);
  }

  report.sort();
  return report;
}

// ---------------------------------------------------------------------------

SolveOutput run_solve_bethe(const RunConfig& config) {
  config.validate();
  SolveOutput out;
  const ModelParams& p = config.model;
  SolverSettings settings = config.solver;
  settings.tol = config.tolerances.tol_onshell;
  Suite s(config, "bethe");
  bool both = true;
  for (const Kind kind : {Kind::one, Kind::two}) {
    const SolveResult result = solve_bethe(kind, p, settings);
    const auto& d = result.diagnostics;
    const Json diag{{"starts", d.starts},
                    {"converged_starts", d.converged_starts},
                    {"rejected_degenerate", d.rejected_degenerate},
                    {"rejected_imag", d.rejected_imag},
                    {"failed", d.failed}};
    const std::string prefix = "kind-" + to_string(kind);
    if (result.sets.empty()) {
      both = false;
      out.report.add(s.record(prefix + "/no-converged-set", p, describe(p), d.best_residual,
                              config.tolerances.tol_ba, 1.0, Json{{"diagnostics", diag}}));
      continue;
    }
    for (std::size_t i = 0; i < result.sets.size(); ++i) {
      const BetheRootSet& set = result.sets[i];
      const BetheRootSet repolished = polish(kind, set.roots, p, 2, settings.tol);
      out.report.add(s.record(prefix + "/set-" + pad(i) + "/residual", p, describe(p, set.roots),
                              set.residual_norm, config.tolerances.tol_ba, 1.0,
                              Json{{"roots", complex_list(set.roots)},
                                   {"repolished_residual", repolished.residual_norm},
                                   {"diagnostics", diag}}));
      out.sets.push_back(set);
    }
  }
  out.found_both_kinds = both;
  out.report.sort();
  return out;
}

// ---------------------------------------------------------------------------

Report run_verify_eigen(const RunConfig& config, const std::vector<BetheRootSet>& sets) {
  config.validate();
  const ModelParams& p = config.model;
  const Tolerances& tol = config.tolerances;
  const RichardsonSettings rs = tol.richardson();
  Report report;
  Suite s(config, "eigen");

  struct SetResult {
    double lambda_sum = 0.0, literal = 0.0, raw_max = 0.0;
  };
  std::vector<SetResult> results(sets.size());

  for (std::size_t i = 0; i < sets.size(); ++i) {
    const BetheRootSet set = sets[i];
    const std::string prefix = "kind-" + to_string(set.kind) + "/set-" + pad(i);
    s.add([=, &s, &results] {
      const auto main = eigen_check(set.kind, set.roots, p, rs, EigenvalueReading::lambda_sum);
      const auto alt = eigen_check(set.kind, set.roots, p, rs, EigenvalueReading::literal);
      Json sites = Json::array();
      double worst = 0.0, worst_alt = 0.0, worst_shifted = 0.0;
      Complex max_shift = 0.0;
      for (std::size_t j = 0; j < main.size(); ++j) {
        worst = std::max(worst, main[j].eigen_residual);
        worst_alt = std::max(worst_alt, alt[j].eigen_residual);
        worst_shifted = std::max(worst_shifted, main[j].rayleigh_residual);
        if (std::abs(main[j].shift) > std::abs(max_shift)) max_shift = main[j].shift;
        sites.push_back(Json{{"site", main[j].site},
                             {"E", complex_json(main[j].value)},
                             {"rayleigh", complex_json(main[j].rayleigh)},
                             {"eigen_residual", main[j].eigen_residual},
                             {"shift", complex_json(main[j].shift)},
                             {"shift_adjusted_residual", main[j].rayleigh_residual},
                             {"literal_reading_residual", alt[j].eigen_residual}});
      }
      results[i] = {worst, worst_alt, worst_shifted};
      return s.record(prefix + "/all-sites", p, describe(p, set.roots), worst, tol.tol_eigen, 1.0,
                      Json{{"roots", complex_list(set.roots)},
                           {"reading", "lambda_sum"},
                           {"max_shift", complex_json(max_shift)},
                           {"max_shift_adjusted_residual", worst_shifted},
                           {"max_literal_reading_residual", worst_alt},
                           {"sites", sites}});
    });
  }

  // Off-shell control: moving one root by 1e-2 must break the eigenvector property.
  if (!sets.empty()) {
    const BetheRootSet set = sets.front();
    s.add([=, &s] {
      std::vector<Complex> off = set.roots;
      off[0] += 1e-2;
      double on_err = 0.0, off_err = 0.0;
      for (const auto& r : eigen_check(set.kind, set.roots, p, rs)) on_err = std::max(on_err, r.eigen_residual);
      for (const auto& r : eigen_check(set.kind, off, p, rs)) off_err = std::max(off_err, r.eigen_residual);
      const double measured = tol.control_factor * on_err / std::max(off_err, 1e-300);
      return s.record("negative-control/off-shell", p, describe(p, off), measured, 1.0, 1.0,
                      Json{{"on_shell_residual", on_err}, {"off_shell_residual", off_err}});
    });
  }
  s.run_into(report);

  if (!sets.empty()) {
    double lam = 0.0, lit = 0.0;
    for (const auto& r : results) {
      lam = std::max(lam, r.lambda_sum);
      lit = std::max(lit, r.literal);
    }
    std::string passing = "none";
    if (lam <= tol.tol_eigen && lit <= tol.tol_eigen) passing = "both";
    else if (lam <= tol.tol_eigen) passing = "lambda_sum";
    else if (lit <= tol.tol_eigen) passing = "literal";
    report.add(s.record("reading", p, describe(p), std::min(lam, lit), tol.tol_eigen, 1.0,
                        Json{{"lambda_sum_max_residual", lam},
                             {"literal_max_residual", lit},
                             {"passing_reading", passing}}));
  }
  report.sort();
  return report;
}

// ---------------------------------------------------------------------------

Report run_verify_scalar(const RunConfig& config, const std::vector<BetheRootSet>& sets) {
  config.validate();
  const Tolerances& tol = config.tolerances;
  const ModelParams& model = config.model;
  Sampler sampler(config.rng_seed);
  Report report;

  if (config.suites.partition) {
    Suite s(config, "partition");
    for (const int n : config.checks.partition_sizes) {
      const double t = n <= 4 ? tol.tol_partition : tol.tol_partition_large;
      for (std::size_t d = 0; d < static_cast<std::size_t>(config.checks.partition_draws); ++d) {
        const ModelParams p = with_eps(sampler.model(n, model.eta), config);
        const auto ubar = sampler.spectral(n, p);
        for (const Kind kind : {Kind::one, Kind::two}) {
          s.add([=, &s] {
            const auto det = partition_det(kind, ubar, p);
            const auto rec = partition_recursive(kind, ubar, p);
            const auto bf = partition_bruteforce(kind, ubar, p);
            const double e_dr = rel_error(det.value, rec.value);
            const double e_db = rel_error(det.value, bf.value);
            const double e_rb = rel_error(rec.value, bf.value);
            return s.record("N=" + std::to_string(n) + "/draw-" + pad(d) + "/kind-" + to_string(kind), p,
                            describe(p, ubar), std::max({e_dr, e_db, e_rb}), t, det.condition_estimate,
                            Json{{"determinant", complex_json(det.value)},
                                 {"det_vs_recursion", e_dr},
                                 {"det_vs_bruteforce", e_db},
                                 {"recursion_vs_bruteforce", e_rb}});
          });
        }
      }
    }
    s.run_into(report);
  }

  const int m = model.n_sites() / 2;
  if (config.suites.scalar_products) {
    Suite s(config, "scalar_products");
    for (std::size_t d = 0; d < static_cast<std::size_t>(config.checks.scalar_draws); ++d) {
      const auto uv = sampler.spectral(2 * m, model);
      const std::vector<Complex> u(uv.begin(), uv.begin() + m), v(uv.begin() + m, uv.end());
      s.add([=, &s] {
        const auto a = s12(u, v, model), b = partition_bruteforce(Kind::one, uv, model);
        const auto c = s21(u, v, model), e = partition_bruteforce(Kind::two, uv, model);
        const double err = std::max(rel_error(a.value, b.value), rel_error(c.value, e.value));
        return s.record("s12-s21/draw-" + pad(d), model, describe(model, uv), err, tol.tol_scalar,
                        std::max(a.condition_estimate, c.condition_estimate),
                        Json{{"s12", complex_json(a.value)}, {"s21", complex_json(c.value)}});
      });
    }
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const BetheRootSet set = sets[i];
      const std::string prefix = "s" + to_string(set.kind) + to_string(set.kind) + "/set-" + pad(i);
      for (std::size_t d = 0; d < static_cast<std::size_t>(config.checks.scalar_draws); ++d) {
        const auto u = sampler.spectral(m, model, kDrawMargin, set.roots);
        s.add([=, &s] {
          const auto det = s_kk_det(set.kind, u, set.roots, model, ShellPolicy::require, tol.tol_onshell);
          const auto tilde = s_kk_bruteforce(set.kind, u, set.roots, model);
          return s.record(prefix + "/draw-" + pad(d) + "/det-vs-bruteforce", model,
                          describe(model, u), rel_error(det.value, tilde.value), tol.tol_scalar,
                          det.condition_estimate,
                          Json{{"u", complex_list(u)}, {"determinant", complex_json(det.value)},
                               {"bruteforce", complex_json(tilde.value)}});
        });
        s.add([=, &s] {
          const auto tilde = s_kk_bruteforce(set.kind, u, set.roots, model);
          const auto gauged = s_kk_bruteforce_gauged(set.kind, u, set.roots, model);
          const Complex overlap = vacuum_overlap(model);
          return s.record(prefix + "/draw-" + pad(d) + "/gauged-vs-tilde", model, describe(model, u),
                          rel_error(gauged.value, overlap * tilde.value), tol.tol_scalar, 1.0,
                          Json{{"gauged", complex_json(gauged.value)},
                               {"vacuum_overlap", complex_json(overlap)}});
        });
        s.add([=, &s] {
          const double on = rel_error(s_kk_det(set.kind, u, set.roots, model).value,
                                      s_kk_bruteforce(set.kind, u, set.roots, model).value);
          std::vector<Complex> off = set.roots;
          off[0] += 1e-3;
          const double offe = rel_error(s_kk_det(set.kind, u, off, model, ShellPolicy::skip).value,
                                        s_kk_bruteforce(set.kind, u, off, model).value);
          return s.record(prefix + "/draw-" + pad(d) + "/negative-control", model, describe(model, off),
                          tol.control_factor * on / std::max(offe, 1e-300), 1.0, 1.0,
                          Json{{"on_shell_error", on}, {"perturbed_error", offe}});
        });
      }
    }
    s.run_into(report);
  }

  if (config.suites.intermediate) {
    Suite s(config, "intermediate");
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const BetheRootSet set = sets[i];
      if (set.kind != Kind::one) continue;
      const auto u = sampler.spectral(m, model, kDrawMargin, set.roots);
      const std::string prefix = "set-" + pad(i);
      const int n = model.n_sites();
      s.add([=, &s] {
        // All (M - k)-subsets of sites, for k = 0..M.
        std::function<void(int, std::vector<int>&, int, std::vector<std::vector<int>>&)> subsets =
            [&](int start, std::vector<int>& cur, int size, std::vector<std::vector<int>>& acc) {
              if (static_cast<int>(cur.size()) == size) {
                acc.push_back(cur);
                return;
              }
              for (int j = start; j <= n; ++j) {
                cur.push_back(j);
                subsets(j + 1, cur, size, acc);
                cur.pop_back();
              }
            };
        double worst = 0.0;
        for (int k = 1; k <= m; ++k) {
          std::vector<std::vector<int>> acc;
          std::vector<int> cur;
          subsets(1, cur, m - k, acc);
          const std::vector<Complex> prefix_u(u.begin(), u.begin() + k);
          for (const auto& sites : acc) {
            worst = std::max(worst, rel_error(intermediate_g(prefix_u, sites, set.roots, model),
                                              intermediate_g_recursive(prefix_u, sites, set.roots, model)));
          }
        }
        return s.record(prefix + "/recursion", model, describe(model, u), worst, tol.tol_intermediate);
      });
      s.add([=, &s] {
        const Complex g = intermediate_g(u, {}, set.roots, model);
        const Complex direct = s_kk_bruteforce(Kind::one, u, set.roots, model).value;
        const Complex det = s_kk_det(Kind::one, u, set.roots, model).value;
        return s.record(prefix + "/G-M-vs-S11", model, describe(model, u),
                        std::max(rel_error(g, direct), rel_error(g, det)), tol.tol_intermediate, 1.0,
                        Json{{"G_M", complex_json(g)}, {"s11_det", complex_json(det)}});
      });
      s.add([=, &s] {
        double worst = 0.0;
        std::function<void(int, std::vector<int>&)> walk = [&](int start, std::vector<int>& cur) {
          if (static_cast<int>(cur.size()) == m) {
            std::vector<Complex> zs;
            for (const int j : cur) zs.push_back(model.z[static_cast<std::size_t>(j - 1)]);
            const Complex z2 = partition_bruteforce(Kind::two, set.roots, model.with_z(zs)).value;
            worst = std::max(worst, rel_error(intermediate_g({}, cur, set.roots, model), z2));
            return;
          }
          for (int j = start; j <= n; ++j) {
            cur.push_back(j);
            walk(j + 1, cur);
            cur.pop_back();
          }
        };
        std::vector<int> cur;
        walk(1, cur);
        return s.record(prefix + "/G-0-vs-partition", model, describe(model), worst, tol.tol_intermediate);
      });
    }
    s.run_into(report);
  }

  report.sort();
  return report;
}

}  // namespace gaudin
