#include "gef/intensity.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <limits>
#include <cmath>

#include "gef/covariance.hpp"
#include "gef/errors.hpp"
#include "gef/parallel.hpp"
#include "gef/permanent.hpp"
#include "gef/stats.hpp"
#include "gef/transforms.hpp"

namespace gef {

using cd = std::complex<double>;

PointConfiguration PointConfiguration::of(std::vector<cd> pts) {
  PointConfiguration cfg;
  cfg.points = std::move(pts);
  return cfg;
}

PointConfiguration PointConfiguration::with_partition(std::vector<int> i_set,
                                                      std::vector<int> j_set) const {
  if (i_set.empty() || j_set.empty())
    throw ShapeError("with_partition: both index sets must be non-empty");
  std::vector<bool> seen(points.size(), false);
  for (int idx : i_set) {
    if (idx < 0 || idx >= k() || seen[idx]) throw ShapeError("with_partition: bad index set I");
    seen[idx] = true;
  }
  for (int idx : j_set) {
    if (idx < 0 || idx >= k() || seen[idx]) throw ShapeError("with_partition: bad index set J");
    seen[idx] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw ShapeError("with_partition: I and J must cover all indices");
  PointConfiguration out = *this;
  out.partition = std::make_pair(std::move(i_set), std::move(j_set));
  return out;
}

double PointConfiguration::partition_distance() const {
  if (!partition) throw ShapeError("partition_distance: configuration has no partition");
  double d = std::numeric_limits<double>::infinity();
  for (int i : partition->first)
    for (int j : partition->second) d = std::min(d, std::abs(points[i] - points[j]));
  return d;
}

namespace {

struct Conditioned {
  Eigen::MatrixXcd lambda;  // conditional covariance of the derivative vector
  double log_det_a = 0.0;   // log det of the (scaled) value block
};

// Lambda = D - B^* A^{-1} B in the scaled gauge; gauge factors cancel in
// per(Lambda) / det(A) exactly, so intensities computed from these scaled
// blocks equal the raw ones.
Conditioned condition_on_zero_values(const BlockCovariance& cov) {
  Eigen::LDLT<Eigen::MatrixXcd> ldlt(cov.value_block);
  const double tol =
      1e-12 * cov.value_block.real().trace() / std::max(1, cov.k);
  const double min_pivot = ldlt.vectorD().real().minCoeff();
  if (ldlt.info() != Eigen::Success || min_pivot <= tol)
    throw ConditioningError("rho_k: value covariance nearly singular (coincident points?)",
                            min_pivot);
  Conditioned c;
  c.lambda = cov.deriv_block - cov.cross_block.adjoint() * ldlt.solve(cov.cross_block);
  c.lambda = ((c.lambda + c.lambda.adjoint()) * 0.5).eval();
  c.log_det_a = ldlt.vectorD().real().array().log().sum();
  return c;
}

double pi_pow(int k) { return std::pow(M_PI, k); }

}  // namespace

IntensityValue rho_k_closed_form(const KernelSpec& spec, const PointConfiguration& cfg) {
  const auto cov = build_covariance(spec, cfg.points);
  const auto c = condition_on_zero_values(cov);
  const double per = permanent(c.lambda).real();
  const double rho = per / pi_pow(cov.k) * std::exp(-c.log_det_a);
  return {rho, IntensityMethod::ClosedForm, 0.0};
}

IntensityValue rho_k_monte_carlo(const KernelSpec& spec, const PointConfiguration& cfg,
                                 std::size_t samples, Rng& rng, std::size_t workers) {
  if (samples == 0) throw EmptyRequestError("rho_k_monte_carlo: samples must be >= 1");
  const auto cov = build_covariance(spec, cfg.points);
  const auto c = condition_on_zero_values(cov);
  const int k = cov.k;

  Eigen::LLT<Eigen::MatrixXcd> llt(c.lambda);
  if (llt.info() != Eigen::Success)
    throw ConditioningError("rho_k_monte_carlo: conditional covariance not factorizable", 0.0);
  const Eigen::MatrixXcd chol = llt.matrixL();

  // Chunked accumulation with per-chunk substreams; reduction in chunk order
  // keeps the estimate deterministic for a fixed (seed, samples, workers).
  const std::size_t chunk = 16384;
  const std::size_t nchunks = (samples + chunk - 1) / chunk;
  std::vector<double> chunk_sum(nchunks, 0.0), chunk_sumsq(nchunks, 0.0);

  parallel_for(nchunks, workers, [&](std::size_t ci) {
    Rng sub = rng.substream(ci);
    const std::size_t lo = ci * chunk;
    const std::size_t hi = std::min(samples, lo + chunk);
    Eigen::VectorXcd xi(k), eta(k);
    CompensatedSum s1, s2;
    for (std::size_t t = lo; t < hi; ++t) {
      for (int i = 0; i < k; ++i) xi(i) = sub.next_complex_gaussian();
      eta.noalias() = chol * xi;
      double prod = 1.0;
      for (int i = 0; i < k; ++i) prod *= std::norm(eta(i));
      s1.add(prod);
      s2.add(prod * prod);
    }
    chunk_sum[ci] = s1.value();
    chunk_sumsq[ci] = s2.value();
  });

  CompensatedSum s1, s2;
  for (std::size_t ci = 0; ci < nchunks; ++ci) {
    s1.add(chunk_sum[ci]);
    s2.add(chunk_sumsq[ci]);
  }
  const double n = static_cast<double>(samples);
  const double mean_prod = s1.value() / n;
  const double var_prod = std::max(0.0, s2.value() / n - mean_prod * mean_prod);
  const double scale = std::exp(-c.log_det_a) / pi_pow(k);
  return {mean_prod * scale, IntensityMethod::MonteCarlo,
          std::sqrt(var_prod / n) * scale};
}

double rho_truncated(const KernelSpec& spec, const PointConfiguration& cfg) {
  const int k = cfg.k();
  if (k < 1 || k > 5) throw SizeLimitError("rho_truncated: k <= 5");
  SubsetValues rho(std::size_t{1} << k,
                   std::numeric_limits<double>::quiet_NaN());
  for (std::uint32_t mask = 1; mask < rho.size(); ++mask) {
    std::vector<cd> sub;
    for (int i = 0; i < k; ++i)
      if (mask & (std::uint32_t{1} << i)) sub.push_back(cfg.points[i]);
    rho[mask] = rho_k_closed_form(spec, PointConfiguration::of(sub)).rho;
  }
  return truncated_from_correlations(k, rho);
}

ClusteringGap clustering_gap(const KernelSpec& spec, const PointConfiguration& cfg) {
  if (!cfg.partition) throw ShapeError("clustering_gap: configuration has no partition");
  if (cfg.k() > 4) throw SizeLimitError("clustering_gap: k <= 4");
  const auto& [iset, jset] = *cfg.partition;
  std::vector<cd> zi, zj;
  for (int i : iset) zi.push_back(cfg.points[i]);
  for (int j : jset) zj.push_back(cfg.points[j]);

  const double rho_full = rho_k_closed_form(spec, cfg).rho;
  const double rho_i = rho_k_closed_form(spec, PointConfiguration::of(zi)).rho;
  const double rho_j = rho_k_closed_form(spec, PointConfiguration::of(zj)).rho;

  ClusteringGap g;
  g.additive_gap = rho_full - rho_i * rho_j;
  g.ratio = rho_full / (rho_i * rho_j);
  g.distance = cfg.partition_distance();
  return g;
}

double product_bound_ratio(const KernelSpec& spec, const PointConfiguration& cfg) {
  if (cfg.k() > 4) throw SizeLimitError("product_bound_ratio: k <= 4");
  const double rho = rho_k_closed_form(spec, cfg).rho;
  double prod = 1.0;  // empty product for k = 1
  for (int i = 0; i < cfg.k(); ++i)
    for (int j = i + 1; j < cfg.k(); ++j) {
      const double t = std::abs(cfg.points[i] - cfg.points[j]);
      prod *= std::min(t * t, 1.0);
    }
  return rho / prod;
}

}  // namespace gef
