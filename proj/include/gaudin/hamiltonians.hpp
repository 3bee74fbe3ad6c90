#pragma once

// Gaudin Hamiltonians H_j built two independent ways: the closed local form
// and the eta-derivative of the transfer matrix at u = z_j.

#include "gaudin/numerics.hpp"
#include "gaudin/params.hpp"
#include "gaudin/tensor.hpp"

#include <vector>

namespace gaudin {

// A sum of one- and two-site terms, kept local so it can act on states of up
// to kMaxSites sites without a dense 2^N x 2^N matrix.
class LocalOperatorSum {
 public:
  explicit LocalOperatorSum(int n_sites) : n_sites_(n_sites) {}

  void add(int site, const Mat2& op) { one_site_.push_back({site, op}); }
  void add(int site_a, int site_b, const Mat4& op) { two_site_.push_back({site_a, site_b, op}); }

  int n_sites() const { return n_sites_; }
  StateVector apply(const StateVector& v) const;
  Operator dense() const;

 private:
  struct OneSite {
    int site;
    Mat2 op;
  };
  struct TwoSite {
    int a, b;
    Mat4 op;
  };
  int n_sites_;
  std::vector<OneSite> one_site_;
  std::vector<TwoSite> two_site_;
};

// How the boundary matrix K_j(z_j) enters the local formula.
//  derived:    Gamma_j = K_j * d/deta Kbar_j,  second sum wrapped as K_j (...) K_j^{-1}
//  as_printed: Gamma_j = d/deta Kbar_j * K_j,  second sum wrapped as K_j^{-1} (...) K_j
// Only `derived` agrees with the transfer-matrix expansion; `as_printed` is kept
// so the verification pipeline can report the comparison.
enum class HamiltonianReading { derived, as_printed };

// Kbar(u) = tr_0 { K^+_0(u) R_{0j}(2u) P_{0j} } at the crossing parameter params.eta.
Mat2 kbar(Complex u, const ModelParams& params);

// d/deta Kbar(z_j) at eta = 0 (Richardson), combined with K(z_j) per `reading`.
Mat2 gamma(int site, const ModelParams& params, const RichardsonSettings& settings = {},
           HamiltonianReading reading = HamiltonianReading::derived);

LocalOperatorSum hamiltonian_terms(int site, const ModelParams& params,
                                   const RichardsonSettings& settings = {},
                                   HamiltonianReading reading = HamiltonianReading::derived);

Operator hamiltonian_direct(int site, const ModelParams& params,
                            const RichardsonSettings& settings = {},
                            HamiltonianReading reading = HamiltonianReading::derived);

// Richardson extrapolation of (tau(z_j; h) - I) / h; tau(z_j; 0) = I.
RichardsonResult hamiltonian_from_transfer(int site, const ModelParams& params,
                                           const RichardsonSettings& settings = {});

struct ConstructionComparison {
  double relative_distance = 0.0;    // ||A - B|| / ||B||
  Complex identity_shift;            // tr(A - B) / dim
  double relative_after_shift = 0.0; // same with the identity shift removed
};

ConstructionComparison compare_constructions(const Operator& direct, const Operator& from_transfer);

struct GaudinSet {
  ModelParams params;
  std::vector<Operator> hams;  // hams[j - 1] = H_j
};

GaudinSet build_gaudin_set(const ModelParams& params, const RichardsonSettings& settings = {},
                           HamiltonianReading reading = HamiltonianReading::derived);

// max over j < k of ||[H_j, H_k]|| / (||H_j|| ||H_k||).
double max_relative_commutator(const std::vector<Operator>& ops);

}  // namespace gaudin
