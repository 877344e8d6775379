#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace gef {

// Unordered partition of {0, ..., k-1} in canonical form: blocks ordered by
// smallest element, elements ascending within a block.
struct SetPartition {
  int ground_size = 0;
  std::vector<std::vector<int>> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  std::vector<int> block_sizes() const;
};

// Maximum supported ground-set size (Bell(12) = 4'213'597 partitions).
inline constexpr int kMaxPartitionGround = 12;

// Streams every partition of {0..k-1} exactly once, in restricted-growth-
// string order.  k outside [1, 12] raises SizeLimitError.
void enumerate_partitions(int k, const std::function<void(const SetPartition&)>& visit);

// Partitions with exactly j blocks; j > k yields an empty stream.
void enumerate_partitions_into(int k, int j,
                               const std::function<void(const SetPartition&)>& visit);

std::uint64_t bell_number(int k);
std::uint64_t stirling_second(int k, int j);

}  // namespace gef
