#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

#include "gef/kernel.hpp"

namespace gef {

// Coefficients of the linear functional L f = sum_j [alpha_j f(z_j) + beta_j f'(z_j)].
struct FunctionalCoefficients {
  std::vector<std::complex<double>> alpha;
  std::vector<std::complex<double>> beta;
};

// Covariance of (f(z_1), f'(z_1), ..., f(z_k), f'(z_k)) in block form:
//
//   Gamma = [ A  B ]   A_ij = K(z_i, z_j)
//           [ B* D ]   B_ij = d_wbar K(z_i, w) |_{w=z_j}
//                      D_ij = d_z d_wbar K(z,w) |_{z=z_i, w=z_j}
//
// Internally the variable pair at z_i is scaled by e^{-g_i} with
// g_i = kernel_log_gauge(z_i), so stored entries stay bounded for large
// points; raw entries are stored * e^{g_i + g_j}.  All intensity formulas
// downstream are invariant under this diagonal scaling.
//
// Natural variable order is interleaved (value, derivative per point); the
// stored block order is the fixed permutation values-first: interleaved
// index 2j   <-> block index j       (values)
// interleaved index 2j+1 <-> block index k + j   (derivatives).
struct BlockCovariance {
  int k = 0;
  std::vector<std::complex<double>> points;
  Eigen::MatrixXcd value_block;  // scaled A, k x k
  Eigen::MatrixXcd cross_block;  // scaled B, k x k
  Eigen::MatrixXcd deriv_block;  // scaled D, k x k
  Eigen::VectorXd log_gauge;     // g_i

  // 2k x 2k Hermitian matrix in block order, scaled gauge.
  Eigen::MatrixXcd assembled_scaled() const;
  // Raw (unscaled) entries; may overflow for very large points.
  std::complex<double> raw_value(int i, int j) const;
  std::complex<double> raw_cross(int i, int j) const;
  std::complex<double> raw_deriv(int i, int j) const;
};

// Fills the blocks from the kernel, asserts Hermitian assembly and checks
// positive definiteness by pivoted factorization.  Exact duplicate points
// raise DegenerateConfigError; pivots below 1e-12 * trace/(2k) raise
// ConditioningError carrying the smallest pivot.
BlockCovariance build_covariance(const KernelSpec& spec,
                                 std::span<const std::complex<double>> points);

// Hermitian quadratic form <Gamma delta, delta> = E |L f|^2 for the
// functional with the given coefficients (interleaved order).
double functional_variance(const BlockCovariance& cov, const FunctionalCoefficients& delta);

// |E{ T_{w1} F(l1) * conj(T_{w2} F(l2)) }| for the projective shift
// T_w F(z) = F(w+z) e^{-z conj(w)} e^{-|w|^2/2}, in closed form
// exp(|l1|^2/2 + |l2|^2/2 - |(w1+l1)-(w2+l2)|^2/2).
double shifted_pair_covariance(std::complex<double> w1, std::complex<double> w2,
                               std::complex<double> l1, std::complex<double> l2);

}  // namespace gef
