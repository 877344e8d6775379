#include "gef/poly_density.hpp"

#include <cmath>
#include <vector>

#include "gef/errors.hpp"
#include "gef/stats.hpp"

namespace gef {

using cd = std::complex<double>;

namespace {

void check_args(std::span<const cd> zeros, int k) {
  if (k < 1 || k > 3) throw SizeLimitError("polynomial_zero_density: k <= 3");
  if (static_cast<int>(zeros.size()) != 2 * k - 1)
    throw ShapeError("polynomial_zero_density: expected 2k-1 zeros");
}

// |sigma|^2 sum for the monic polynomial with the given zeros.
double coefficient_norm_sq(std::span<const cd> zeros) {
  std::vector<cd> sigma{1.0};  // coefficients, highest degree first
  for (const cd& z : zeros) {
    sigma.push_back(0.0);
    for (std::size_t i = sigma.size() - 1; i >= 1; --i) sigma[i] = sigma[i] - z * sigma[i - 1];
  }
  double q = 0.0;
  for (const cd& s : sigma) q += std::norm(s);
  return q;
}

double vandermonde_sq(std::span<const cd> zeros, int i_max, int j_max) {
  double v = 1.0;
  for (int i = 0; i < i_max; ++i)
    for (int j = i + 1; j < j_max; ++j) v *= std::norm(zeros[i] - zeros[j]);
  return v;
}

}  // namespace

double poly_density_normalization(int k) {
  if (k < 1 || k > 3) throw SizeLimitError("poly_density_normalization: k <= 3");
  return std::pow(M_PI, -(2 * k - 1));
}

double polynomial_zero_density(std::span<const cd> zeros, int k) {
  check_args(zeros, k);
  const int n = 2 * k - 1;
  const double v = vandermonde_sq(zeros, n, n);
  if (v == 0.0) return 0.0;
  const double q = coefficient_norm_sq(zeros);
  return poly_density_normalization(k) * v * std::pow(q, -2.0 * k);
}

double polynomial_density_h_factor(std::span<const cd> zeros, int k) {
  check_args(zeros, k);
  const int n = 2 * k - 1;
  // full Vandermonde over pairs not both among the first k variables
  double v_rest = 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = std::max(i + 1, k); j < n; ++j) v_rest *= std::norm(zeros[i] - zeros[j]);
  const double q = coefficient_norm_sq(zeros);
  return poly_density_normalization(k) * v_rest * std::pow(q, -2.0 * k);
}

double poly_density_normalization_check(int k, std::size_t points) {
  if (k < 1 || k > 3) throw SizeLimitError("poly_density_normalization_check: k <= 3");
  if (points == 0) throw EmptyRequestError("poly_density_normalization_check: points >= 1");
  const int n = 2 * k - 1;
  const int dim = 2 * n;

  // Each complex variable is mapped from the unit square by
  // z = (t/(1-t)) e^{2 pi i u}; the area element r dr dphi contributes
  // 2 pi t / (1-t)^3, which the (1+|z|)^{-4} decay of the integrand tames
  // to a bounded transformed integrand.
  CompensatedSum acc;
  std::vector<cd> zs(n);
  for (std::size_t idx = 0; idx < points; ++idx) {
    const auto x = halton_point(idx, dim);
    double jac = 1.0;
    for (int v = 0; v < n; ++v) {
      const double t = x[2 * v];
      const double u = x[2 * v + 1];
      const double r = t / (1.0 - t);
      zs[v] = std::polar(r, 2.0 * M_PI * u);
      jac *= 2.0 * M_PI * t / ((1.0 - t) * (1.0 - t) * (1.0 - t));
    }
    acc.add(polynomial_zero_density(zs, k) * jac);
  }
  return acc.value() / static_cast<double>(points);
}

}  // namespace gef
