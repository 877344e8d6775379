#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gef/kernel.hpp"
#include "gef/rng.hpp"

namespace gef {

// Ordered configuration of pairwise distinct points, optionally carrying a
// two-group partition (index sets I, J) for clustering diagnostics.
struct PointConfiguration {
  std::vector<std::complex<double>> points;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> partition;

  static PointConfiguration of(std::vector<std::complex<double>> pts);
  PointConfiguration with_partition(std::vector<int> i_set, std::vector<int> j_set) const;

  int k() const { return static_cast<int>(points.size()); }
  // d(Z_I, Z_J) = min over i in I, j in J of |z_i - z_j|.
  double partition_distance() const;
};

enum class IntensityMethod { ClosedForm, MonteCarlo };

struct IntensityValue {
  double rho = 0.0;
  IntensityMethod method = IntensityMethod::ClosedForm;
  double mc_std_error = 0.0;  // 0 for the closed form
};

// k-point intensity of the zero set, evaluated exactly: condition the
// derivative vector on vanishing values (Lambda = D - B^* A^{-1} B), then
// E prod |eta_i|^2 of the conditioned complex Gaussian is per(Lambda):
//
//   rho_k = per(Lambda) / (pi^k det A).
//
// Near-coincident points surface as ConditioningError from the pivoted
// factorization of A.
IntensityValue rho_k_closed_form(const KernelSpec& spec, const PointConfiguration& cfg);

// Independent Monte Carlo route: sample the conditioned Gaussian vector,
// average prod |eta_i|^2, scale by the density of the value vector at 0.
// Reports the standard error of the estimate.
IntensityValue rho_k_monte_carlo(const KernelSpec& spec, const PointConfiguration& cfg,
                                 std::size_t samples, Rng& rng, std::size_t workers = 1);

// Truncated (Ursell) k-point function assembled from closed-form rho_j over
// all subsets via the signed partition sum.  k <= 5.
double rho_truncated(const KernelSpec& spec, const PointConfiguration& cfg);

struct ClusteringGap {
  double additive_gap = 0.0;  // rho(Z) - rho(Z_I) rho(Z_J)
  double ratio = 0.0;         // rho(Z) / (rho(Z_I) rho(Z_J))
  double distance = 0.0;      // d(Z_I, Z_J)
};

// Requires a partition; k <= 4.
ClusteringGap clustering_gap(const KernelSpec& spec, const PointConfiguration& cfg);

// rho(Z) / prod_{i<j} l(|z_i - z_j|) with l(t) = min(t^2, 1); k <= 4.
double product_bound_ratio(const KernelSpec& spec, const PointConfiguration& cfg);

}  // namespace gef
