#pragma once

// Dense complex tensor algebra on (C^2)^{\otimes n}.
//
// Ordering: site 1 is the leftmost (most significant) tensor factor. A basis
// index b enumerates spins through its binary expansion, bit (n - s) holding
// site s; bit value 0 is spin up, 1 is spin down. |Up> is index 0 and |Down>
// is index 2^n - 1.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

namespace gaudin {

using Complex = std::complex<double>;
using Operator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr int kMaxSites = 12;

namespace pauli {
Mat2 identity();
Mat2 plus();   // sigma^+ : |down> -> |up>
Mat2 minus();  // sigma^- : |up> -> |down>
Mat2 z();
}  // namespace pauli

// 4x4 swap operator P on C^2 (x) C^2.
Mat4 swap_operator();

std::size_t hilbert_dim(int n_sites);

// I (x) ... (x) op2 (x) ... (x) I with op2 at `site` (1-based).
Operator embed_site(const Mat2& op2, int site, int n_sites);

// op4 acting on the ordered pair of factors (site_a, site_b).
Operator embed_two_site(const Mat4& op4, int site_a, int site_b, int n_sites);

// In-place left application to every column of `target` (rows = 2^n_sites).
// These avoid materializing 2^n x 2^n embeddings.
void apply_site(const Mat2& op2, int site, int n_sites, Eigen::Ref<Eigen::MatrixXcd> target);
void apply_two_site(const Mat4& op4, int site_a, int site_b, int n_sites,
                    Eigen::Ref<Eigen::MatrixXcd> target);

StateVector all_up(int n_sites);
StateVector all_down(int n_sites);

// Product state s_1 (x) s_2 (x) ... (x) s_n.
StateVector product_state(const std::vector<Eigen::Vector2cd>& spinors);

// Basis index with spin down exactly at `down_sites` (1-based).
std::size_t basis_index(const std::vector<int>& down_sites, int n_sites);

// Partial trace over the leftmost (auxiliary) factor of a (2 * d) x (2 * d) matrix.
Operator trace_auxiliary(const Operator& full);

double frobenius_distance(const Operator& a, const Operator& b);

}  // namespace gaudin
