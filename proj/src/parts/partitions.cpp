#include "gef/partitions.hpp"

#include <algorithm>

#include "gef/errors.hpp"

namespace gef {

std::vector<int> SetPartition::block_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(blocks.size());
  for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
  return sizes;
}

namespace {

void check_ground(int k) {
  if (k < 1 || k > kMaxPartitionGround)
    throw SizeLimitError("partition enumeration supports 1 <= k <= 12");
}

// Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
// Blocks indexed by string value are automatically ordered by smallest
// element, which is the canonical form.
template <typename Visit>
void enumerate_rgs(int k, int want_blocks, Visit&& visit) {
  std::vector<int> a(k, 0);
  std::vector<int> maxes(k, 0);  // maxes[i] = max(a[0..i])
  SetPartition part;
  part.ground_size = k;

  auto emit = [&](int nblocks) {
    if (want_blocks > 0 && nblocks != want_blocks) return;
    part.blocks.assign(nblocks, {});
    for (int i = 0; i < k; ++i) part.blocks[a[i]].push_back(i);
    visit(part);
  };

  int i = 1;
  if (k == 1) {
    emit(1);
    return;
  }
  for (;;) {
    // descend to the last position with current prefix
    while (i < k) {
      a[i] = 0;
      maxes[i] = maxes[i - 1];
      ++i;
    }
    emit(maxes[k - 1] + 1);
    // backtrack to the rightmost position that can be incremented
    --i;
    while (i >= 1 && a[i] == maxes[i - 1] + 1) --i;
    if (i < 1) return;
    ++a[i];
    maxes[i] = std::max(maxes[i - 1], a[i]);
    ++i;
  }
}

}  // namespace

void enumerate_partitions(int k, const std::function<void(const SetPartition&)>& visit) {
  check_ground(k);
  enumerate_rgs(k, 0, visit);
}

void enumerate_partitions_into(int k, int j,
                               const std::function<void(const SetPartition&)>& visit) {
  check_ground(k);
  if (j < 1) throw SizeLimitError("enumerate_partitions_into: j must be >= 1");
  if (j > k) return;  // empty stream
  enumerate_rgs(k, j, visit);
}

std::uint64_t bell_number(int k) {
  check_ground(k);
  std::uint64_t sum = 0;
  for (int j = 1; j <= k; ++j) sum += stirling_second(k, j);
  return sum;
}

std::uint64_t stirling_second(int k, int j) {
  check_ground(k);
  if (j < 0 || j > k) return 0;
  if (j == 0) return 0;
  // S(k,j) = S(k-1,j-1) + j*S(k-1,j), S(1,1) = 1
  std::vector<std::uint64_t> row(k + 1, 0);
  row[1] = 1;
  for (int n = 2; n <= k; ++n)
    for (int m = n; m >= 1; --m)
      row[m] = row[m - 1] + static_cast<std::uint64_t>(m) * row[m];
  return row[j];
}

}  // namespace gef
