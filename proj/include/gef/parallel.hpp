#pragma once

#include <cstddef>
#include <functional>

namespace gef {

// Number of workers used when a caller passes workers == 0.
std::size_t default_workers();

// Runs body(i) for i in [0, n).  Tasks must write to disjoint state; the
// first exception thrown by any task is rethrown on the calling thread
// after all workers have joined.
void parallel_for(std::size_t n, std::size_t workers,
                  const std::function<void(std::size_t)>& body);

}  // namespace gef
