#include "gef/kernel.hpp"

#include <cmath>

#include "gef/errors.hpp"

namespace gef {

namespace {
using cd = std::complex<double>;

void check_orders(int dz, int dw) {
  if (dz < 0 || dz > 1 || dw < 0 || dw > 1)
    throw UnsupportedOrderError("kernel_eval: derivative orders must be 0 or 1");
}

cd poly_kernel(const std::vector<double>& c, cd z, cd w, int dz, int dw) {
  const int deg = static_cast<int>(c.size()) - 1;
  const cd wb = std::conj(w);
  cd sum = 0.0;
  cd zp = 1.0, wbp = 1.0;    // z^n, wbar^n
  cd zpm = 0.0, wbpm = 0.0;  // z^{n-1}, wbar^{n-1}, valid for n >= 1
  for (int n = 0; n <= deg; ++n) {
    const double c2 = c[n] * c[n];
    if (c2 != 0.0) {
      const double nn = static_cast<double>(n);
      cd term = 0.0;
      if (dz == 0 && dw == 0)
        term = zp * wbp;
      else if (n >= 1 && dz == 1 && dw == 0)
        term = nn * zpm * wbp;
      else if (n >= 1 && dz == 0 && dw == 1)
        term = nn * zp * wbpm;
      else if (n >= 1)
        term = nn * nn * zpm * wbpm;
      sum += c2 * term;
    }
    zpm = zp;
    wbpm = wbp;
    zp *= z;
    wbp *= wb;
  }
  return sum;
}

}  // namespace

KernelSpec KernelSpec::gaussian_polynomial(std::vector<double> c) {
  if (c.empty()) throw ShapeError("gaussian_polynomial: needs at least one coefficient");
  return {KernelKind::GaussianPolynomial, std::move(c)};
}

KernelSpec KernelSpec::gaussian_polynomial_unit(int degree) {
  if (degree < 0) throw ShapeError("gaussian_polynomial_unit: degree must be >= 0");
  return {KernelKind::GaussianPolynomial, std::vector<double>(degree + 1, 1.0)};
}

std::complex<double> kernel_eval(const KernelSpec& spec, cd z, cd w, int dz, int dw) {
  check_orders(dz, dw);
  if (spec.is_gef()) {
    const cd s = z * std::conj(w);
    const cd e = std::exp(s);
    if (dz == 0 && dw == 0) return e;
    if (dz == 1 && dw == 0) return std::conj(w) * e;
    if (dz == 0 && dw == 1) return z * e;
    return (1.0 + s) * e;
  }
  return poly_kernel(spec.coeff_magnitudes, z, w, dz, dw);
}

double kernel_log_gauge(const KernelSpec& spec, cd z) {
  return spec.is_gef() ? 0.5 * std::norm(z) : 0.0;
}

std::complex<double> kernel_eval_scaled(const KernelSpec& spec, cd z, cd w, int dz, int dw) {
  check_orders(dz, dw);
  if (spec.is_gef()) {
    const cd s = z * std::conj(w);
    // Exponent z wbar - |z|^2/2 - |w|^2/2 has real part -|z-w|^2/2 <= 0.
    const cd e = std::exp(s - 0.5 * std::norm(z) - 0.5 * std::norm(w));
    if (dz == 0 && dw == 0) return e;
    if (dz == 1 && dw == 0) return std::conj(w) * e;
    if (dz == 0 && dw == 1) return z * e;
    return (1.0 + s) * e;
  }
  return poly_kernel(spec.coeff_magnitudes, z, w, dz, dw);
}

}  // namespace gef
