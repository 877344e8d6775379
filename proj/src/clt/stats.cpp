#include "gef/stats.hpp"

#include <algorithm>
#include <cmath>

#include "gef/errors.hpp"

namespace gef {

double mean(std::span<const double> xs) {
  if (xs.empty()) throw EmptyRequestError("mean: empty sample");
  CompensatedSum s;
  for (double x : xs) s.add(x);
  return s.value() / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
  const std::size_t n = xs.size();
  if (n < 2) throw EmptyRequestError("sample_variance: need at least 2 values");
  const double m = mean(xs);
  CompensatedSum s;
  for (double x : xs) s.add((x - m) * (x - m));
  return s.value() / static_cast<double>(n - 1);
}

std::vector<double> central_moments(std::span<const double> xs, int max_order) {
  if (xs.empty()) throw EmptyRequestError("central_moments: empty sample");
  if (max_order < 1) throw ShapeError("central_moments: max_order must be >= 1");
  const double m = mean(xs);
  std::vector<double> mu(max_order + 1, 0.0);
  mu[0] = m;
  std::vector<CompensatedSum> acc(max_order + 1);
  for (double x : xs) {
    const double d = x - m;
    double p = d;
    for (int k = 1; k <= max_order; ++k) {
      acc[k].add(p);
      p *= d;
    }
  }
  const double n = static_cast<double>(xs.size());
  for (int k = 1; k <= max_order; ++k) mu[k] = acc[k].value() / n;
  return mu;
}

double skewness(std::span<const double> xs) {
  const auto mu = central_moments(xs, 3);
  return mu[3] / std::pow(mu[2], 1.5);
}

double excess_kurtosis(std::span<const double> xs) {
  const auto mu = central_moments(xs, 4);
  return mu[4] / (mu[2] * mu[2]) - 3.0;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double ks_distance_to_std_normal(std::span<const double> xs) {
  if (xs.empty()) throw EmptyRequestError("ks_distance: empty sample");
  std::vector<double> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double cdf = normal_cdf(sorted[i]);
    d = std::max(d, std::abs((static_cast<double>(i) + 1.0) / n - cdf));
    d = std::max(d, std::abs(cdf - static_cast<double>(i) / n));
  }
  return d;
}

double chi_square_quantile(double p, int dof) {
  if (dof < 1 || p <= 0.0 || p >= 1.0)
    throw DomainError("chi_square_quantile: need dof >= 1 and 0 < p < 1");
  // Inverse normal via Acklam-style rational approximation is overkill here;
  // the Wilson-Hilferty cube suffices at the levels we use.
  // Inverse standard normal quantile (Beasley-Springer/Moro-grade accuracy).
  auto inv_norm = [](double q) {
    // Peter Acklam's rational approximation.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425, phigh = 1 - plow;
    double x;
    if (q < plow) {
      const double u = std::sqrt(-2 * std::log(q));
      x = (((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
          ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1);
    } else if (q <= phigh) {
      const double u = q - 0.5, r = u * u;
      x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * u /
          (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
    } else {
      const double u = std::sqrt(-2 * std::log(1 - q));
      x = -(((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
          ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1);
    }
    return x;
  };
  const double z = inv_norm(p);
  const double k = static_cast<double>(dof);
  const double t = 1.0 - 2.0 / (9.0 * k) + z * std::sqrt(2.0 / (9.0 * k));
  return k * t * t * t;
}

double jackknife_std_error(std::span<const double> xs, int blocks,
                           const std::function<double(std::span<const double>)>& statistic) {
  const std::size_t n = xs.size();
  if (blocks < 2 || n < static_cast<std::size_t>(blocks))
    throw ShapeError("jackknife_std_error: need at least `blocks` values");
  const std::size_t b = static_cast<std::size_t>(blocks);
  std::vector<double> estimates(b);
  std::vector<double> rest;
  rest.reserve(n);
  for (std::size_t j = 0; j < b; ++j) {
    const std::size_t lo = j * n / b, hi = (j + 1) * n / b;
    rest.clear();
    rest.insert(rest.end(), xs.begin(), xs.begin() + lo);
    rest.insert(rest.end(), xs.begin() + hi, xs.end());
    estimates[j] = statistic(rest);
  }
  const double m = mean(estimates);
  CompensatedSum s;
  for (double e : estimates) s.add((e - m) * (e - m));
  const double nb = static_cast<double>(b);
  return std::sqrt((nb - 1.0) / nb * s.value());
}

std::vector<double> halton_point(std::size_t index, int dim) {
  static const int primes[12] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (dim < 1 || dim > 12) throw SizeLimitError("halton_point: dim must be in [1,12]");
  std::vector<double> x(dim);
  for (int d = 0; d < dim; ++d) {
    const double base = primes[d];
    double f = 1.0, r = 0.0;
    std::size_t i = index + 1;  // skip the all-zeros point
    while (i > 0) {
      f /= base;
      r += f * static_cast<double>(i % static_cast<std::size_t>(base));
      i /= static_cast<std::size_t>(base);
    }
    x[d] = r;
  }
  return x;
}

}  // namespace gef
