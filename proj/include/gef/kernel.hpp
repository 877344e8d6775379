#pragma once

#include <complex>
#include <vector>

namespace gef {

enum class KernelKind { Gef, GaussianPolynomial };

// Covariance kernel of a Gaussian Taylor series.
//   Gef:                K(z,w) = exp(z * conj(w))
//   GaussianPolynomial: K(z,w) = sum_n c_n^2 (z * conj(w))^n
struct KernelSpec {
  KernelKind kind = KernelKind::Gef;
  std::vector<double> coeff_magnitudes;  // c_n, n = 0..degree (polynomial only)

  static KernelSpec gef() { return {KernelKind::Gef, {}}; }
  static KernelSpec gaussian_polynomial(std::vector<double> c);
  // Degree-d polynomial with all c_n = 1.
  static KernelSpec gaussian_polynomial_unit(int degree);

  int degree() const { return static_cast<int>(coeff_magnitudes.size()) - 1; }
  bool is_gef() const { return kind == KernelKind::Gef; }
};

// Mixed derivative d_z^dz d_wbar^dw K(z,w); orders outside {0,1} raise
// UnsupportedOrderError.  For the GEF the four cases are
// e^{z wbar}, wbar e^{z wbar}, z e^{z wbar}, (1 + z wbar) e^{z wbar}.
std::complex<double> kernel_eval(const KernelSpec& spec, std::complex<double> z,
                                 std::complex<double> w, int dz, int dw);

// Log of the diagonal gauge factor: |z|^2 / 2 for the GEF, 0 for polynomials.
// Scaled kernel entries K(z,w) e^{-g(z)-g(w)} stay O(poly) for |z| up to ~30,
// where the raw GEF kernel would overflow.
double kernel_log_gauge(const KernelSpec& spec, std::complex<double> z);

// kernel_eval(z, w, dz, dw) * exp(-g(z) - g(w)), computed without forming
// the raw exponential.
std::complex<double> kernel_eval_scaled(const KernelSpec& spec, std::complex<double> z,
                                        std::complex<double> w, int dz, int dw);

}  // namespace gef
