#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace gef {

// Neumaier-compensated accumulator; deterministic for a fixed input order.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

double mean(std::span<const double> xs);
// Unbiased sample variance (divides by n-1).
double sample_variance(std::span<const double> xs);

// Central moments mu_1..mu_max_order (mu_1 = 0 by construction); index 0
// holds the mean for convenience.
std::vector<double> central_moments(std::span<const double> xs, int max_order);

// Sample skewness mu_3 / mu_2^{3/2} and excess kurtosis mu_4 / mu_2^2 - 3.
double skewness(std::span<const double> xs);
double excess_kurtosis(std::span<const double> xs);

double normal_cdf(double x);

// Kolmogorov-Smirnov distance between the empirical law of xs and the
// standard normal (xs need not be sorted; a sorted copy is made).
double ks_distance_to_std_normal(std::span<const double> xs);

// Wilson-Hilferty approximation of the chi-square quantile, adequate for
// moderate significance levels and dof >= ~5.
double chi_square_quantile(double p, int dof);

// Leave-one-block-out jackknife standard error of a statistic.
double jackknife_std_error(std::span<const double> xs, int blocks,
                           const std::function<double(std::span<const double>)>& statistic);

// Halton low-discrepancy point in [0,1)^dim (dim <= 12), index >= 0.
std::vector<double> halton_point(std::size_t index, int dim);

}  // namespace gef
