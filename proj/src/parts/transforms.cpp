#include "gef/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "gef/errors.hpp"
#include "gef/partitions.hpp"
#include "gef/stats.hpp"

namespace gef {

namespace {

double sign_factor(int nblocks) {
  // (-1)^{l-1} (l-1)!
  double f = 1.0;
  for (int i = 2; i < nblocks; ++i) f *= i;
  return (nblocks % 2 == 1) ? f : -f;
}

void check_transform_size(int k) {
  if (k < 1 || k > kMaxPartitionGround)
    throw SizeLimitError("partition transform supports 1 <= k <= 12");
}

// Sums over all partitions of `mask`: accumulate(prod over blocks of
// values[block], number of blocks).  Blocks are built around the lowest
// remaining element, so each partition is visited exactly once.
template <typename Acc>
void fold_mask_partitions(std::uint32_t mask, const SubsetValues& values, int nblocks,
                          double prod, Acc&& acc) {
  if (mask == 0) {
    acc(nblocks, prod);
    return;
  }
  const std::uint32_t low = mask & (~mask + 1);
  const std::uint32_t rest = mask ^ low;
  for (std::uint32_t t = rest;; t = (t - 1) & rest) {
    const std::uint32_t block = low | t;
    fold_mask_partitions(mask ^ block, values, nblocks + 1, prod * values[block], acc);
    if (t == 0) break;
  }
}

void check_subset_values(int k, const SubsetValues& v) {
  check_transform_size(k);
  const std::size_t want = std::size_t{1} << k;
  if (v.size() != want)
    throw IncompleteInputError("subset transform: expected one value per subset mask");
  for (std::size_t m = 1; m < want; ++m)
    if (!std::isfinite(v[m]))
      throw IncompleteInputError("subset transform: missing (non-finite) subset value");
}

}  // namespace

std::vector<double> moments_to_cumulants(std::span<const double> moments) {
  const int k = static_cast<int>(moments.size());
  if (k == 0) return {};
  check_transform_size(k);
  std::vector<double> s(k);
  for (int n = 1; n <= k; ++n) {
    CompensatedSum acc;
    enumerate_partitions(n, [&](const SetPartition& pi) {
      double prod = sign_factor(pi.block_count());
      for (const auto& b : pi.blocks) prod *= moments[b.size() - 1];
      acc.add(prod);
    });
    s[n - 1] = acc.value();
  }
  return s;
}

std::vector<double> cumulants_to_moments(std::span<const double> cumulants) {
  const int k = static_cast<int>(cumulants.size());
  if (k == 0) return {};
  check_transform_size(k);
  std::vector<double> m(k);
  for (int n = 1; n <= k; ++n) {
    CompensatedSum acc;
    enumerate_partitions(n, [&](const SetPartition& pi) {
      double prod = 1.0;
      for (const auto& b : pi.blocks) prod *= cumulants[b.size() - 1];
      acc.add(prod);
    });
    m[n - 1] = acc.value();
  }
  return m;
}

double truncated_from_correlations(int k, const SubsetValues& rho) {
  check_subset_values(k, rho);
  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  CompensatedSum acc;
  fold_mask_partitions(full, rho, 0, 1.0,
                       [&](int nblocks, double prod) { acc.add(sign_factor(nblocks) * prod); });
  return acc.value();
}

SubsetValues ursell_from_correlations(int k, const SubsetValues& rho) {
  check_subset_values(k, rho);
  SubsetValues out(rho.size(), 0.0);
  for (std::uint32_t mask = 1; mask < rho.size(); ++mask) {
    CompensatedSum acc;
    fold_mask_partitions(mask, rho, 0, 1.0,
                         [&](int nblocks, double prod) { acc.add(sign_factor(nblocks) * prod); });
    out[mask] = acc.value();
  }
  return out;
}

SubsetValues correlations_from_ursell(int k, const SubsetValues& rho_t) {
  check_subset_values(k, rho_t);
  SubsetValues out(rho_t.size(), 0.0);
  for (std::uint32_t mask = 1; mask < rho_t.size(); ++mask) {
    CompensatedSum acc;
    fold_mask_partitions(mask, rho_t, 0, 1.0,
                         [&](int, double prod) { acc.add(prod); });
    out[mask] = acc.value();
  }
  return out;
}

namespace {

// Canonical key: block sizes sorted descending.
std::vector<int> canonical_sizes(std::vector<int> sizes) {
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  return sizes;
}

class BracketCache {
 public:
  explicit BracketCache(const BracketFn& fn) : fn_(fn) {}

  double truncated(const std::vector<int>& sizes) {
    const auto key = canonical_sizes(sizes);
    auto it = trunc_.find(key);
    if (it != trunc_.end()) return it->second;
    const double v = fn_(key);
    trunc_.emplace(key, v);
    return v;
  }

  // Plain bracket <h^{p_1}, ..., h^{p_j}> via the partition factorization
  // over the truncated primitives.
  double plain(const std::vector<int>& sizes) {
    const auto key = canonical_sizes(sizes);
    auto it = plain_.find(key);
    if (it != plain_.end()) return it->second;
    const int j = static_cast<int>(key.size());
    CompensatedSum acc;
    enumerate_partitions(j, [&](const SetPartition& pi) {
      double prod = 1.0;
      for (const auto& b : pi.blocks) {
        std::vector<int> sub;
        sub.reserve(b.size());
        for (int i : b) sub.push_back(key[i]);
        prod *= truncated(sub);
      }
      acc.add(prod);
    });
    const double v = acc.value();
    plain_.emplace(key, v);
    return v;
  }

 private:
  const BracketFn& fn_;
  std::map<std::vector<int>, double> trunc_;
  std::map<std::vector<int>, double> plain_;
};

}  // namespace

double statistic_cumulant(int k, const BracketFn& truncated_bracket) {
  check_transform_size(k);
  BracketCache cache(truncated_bracket);
  CompensatedSum acc;
  enumerate_partitions(k, [&](const SetPartition& gamma) {
    acc.add(cache.truncated(gamma.block_sizes()));
  });
  return acc.value();
}

double statistic_moment(int k, const BracketFn& truncated_bracket) {
  check_transform_size(k);
  BracketCache cache(truncated_bracket);
  CompensatedSum acc;
  enumerate_partitions(k, [&](const SetPartition& gamma) {
    acc.add(cache.plain(gamma.block_sizes()));
  });
  return acc.value();
}

}  // namespace gef
