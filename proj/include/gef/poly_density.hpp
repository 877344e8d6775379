#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace gef {

// Joint density of the 2k-1 zeros of the Gaussian polynomial
// sum_{n=0}^{2k-1} zeta_n z^n, as a symmetric function on ordered tuples
// normalized to total integral 1:
//
//   p(z_1, ..., z_{2k-1}) = C_k prod_{i<j} |z_i - z_j|^2
//                           * ( sum_j |sigma_j|^2 )^{-2k},
//
// where sigma_j are the coefficients of prod (z - z_i) (monic).  Coincident
// points return exactly 0 (continuous extension).  k <= 3.
double polynomial_zero_density(std::span<const std::complex<double>> zeros, int k);

// Normalization constant C_k = 1 / pi^{2k-1}.  Writing the coefficient map
// (zeros, top coefficient) -> coefficients with its Vandermonde Jacobian and
// integrating the top coefficient gives C_k exactly; the quasi-random
// normalization below validates it numerically.
double poly_density_normalization(int k);

// Quasi-random (Halton) estimate of the total integral of the density over
// the compactified domain; equals 1 up to integration error.
double poly_density_normalization_check(int k, std::size_t points);

// The factor H = p / prod_{1<=i<j<=k} |z_i - z_j|^2 (product over the first
// k variables only), used by the tail-bound diagnostics.
double polynomial_density_h_factor(std::span<const std::complex<double>> zeros, int k);

}  // namespace gef
