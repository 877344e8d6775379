#include "gef/covariance.hpp"

#include <cmath>

#include "gef/errors.hpp"

namespace gef {

using cd = std::complex<double>;

Eigen::MatrixXcd BlockCovariance::assembled_scaled() const {
  Eigen::MatrixXcd g(2 * k, 2 * k);
  g.topLeftCorner(k, k) = value_block;
  g.topRightCorner(k, k) = cross_block;
  g.bottomLeftCorner(k, k) = cross_block.adjoint();
  g.bottomRightCorner(k, k) = deriv_block;
  return g;
}

cd BlockCovariance::raw_value(int i, int j) const {
  return value_block(i, j) * std::exp(log_gauge(i) + log_gauge(j));
}
cd BlockCovariance::raw_cross(int i, int j) const {
  return cross_block(i, j) * std::exp(log_gauge(i) + log_gauge(j));
}
cd BlockCovariance::raw_deriv(int i, int j) const {
  return deriv_block(i, j) * std::exp(log_gauge(i) + log_gauge(j));
}

BlockCovariance build_covariance(const KernelSpec& spec,
                                 std::span<const std::complex<double>> points) {
  const int k = static_cast<int>(points.size());
  if (k == 0) throw ShapeError("build_covariance: empty point configuration");
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (points[i] == points[j])
        throw DegenerateConfigError("build_covariance: duplicate points in configuration");

  BlockCovariance cov;
  cov.k = k;
  cov.points.assign(points.begin(), points.end());
  cov.value_block.resize(k, k);
  cov.cross_block.resize(k, k);
  cov.deriv_block.resize(k, k);
  cov.log_gauge.resize(k);
  for (int i = 0; i < k; ++i) cov.log_gauge(i) = kernel_log_gauge(spec, points[i]);

  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      cov.value_block(i, j) = kernel_eval_scaled(spec, points[i], points[j], 0, 0);
      cov.cross_block(i, j) = kernel_eval_scaled(spec, points[i], points[j], 0, 1);
      cov.deriv_block(i, j) = kernel_eval_scaled(spec, points[i], points[j], 1, 1);
    }
  }
  // Hermitian by construction up to roundoff; symmetrize the diagonal blocks
  // so assembled_scaled() is exactly self-adjoint.
  cov.value_block = ((cov.value_block + cov.value_block.adjoint()) * 0.5).eval();
  cov.deriv_block = ((cov.deriv_block + cov.deriv_block.adjoint()) * 0.5).eval();

  const Eigen::MatrixXcd gamma = cov.assembled_scaled();
  Eigen::LDLT<Eigen::MatrixXcd> ldlt(gamma);
  const double tol = 1e-12 * gamma.real().trace() / (2.0 * k);
  const double min_pivot = ldlt.vectorD().real().minCoeff();
  if (ldlt.info() != Eigen::Success || min_pivot <= tol)
    throw ConditioningError("build_covariance: covariance not positive definite", min_pivot);
  return cov;
}

double functional_variance(const BlockCovariance& cov, const FunctionalCoefficients& delta) {
  const int k = cov.k;
  if (static_cast<int>(delta.alpha.size()) != k || static_cast<int>(delta.beta.size()) != k)
    throw ShapeError("functional_variance: coefficient length does not match configuration");

  // <Gamma delta, delta> with raw Gamma equals the scaled quadratic form of
  // the gauge-unscaled coefficients e^{g_i} (alpha_i, beta_i).
  Eigen::VectorXcd v(2 * k);
  for (int i = 0; i < k; ++i) {
    const double s = std::exp(cov.log_gauge(i));
    v(i) = delta.alpha[i] * s;
    v(k + i) = delta.beta[i] * s;
  }
  const Eigen::MatrixXcd gamma = cov.assembled_scaled();
  const cd q = v.dot(gamma * v);  // conjugate-linear in the first argument
  return std::max(0.0, q.real());
}

double shifted_pair_covariance(cd w1, cd w2, cd l1, cd l2) {
  const double expo =
      0.5 * std::norm(l1) + 0.5 * std::norm(l2) - 0.5 * std::norm((w1 + l1) - (w2 + l2));
  return std::exp(expo);
}

}  // namespace gef
