#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace gef {

struct CoveringResult {
  std::vector<std::complex<double>> centers;
  double radius = 1.0;
  std::vector<int> assignment;  // point index -> center index
};

// Iterative merge covering: start with unit disks at the points; while two
// centers are closer than dmin(radius), replace them by their midpoint and
// grow the radius to radius + dmin(radius)/2.  On output every point lies in
// some disk, pairwise center distances are >= dmin(radius), the number of
// centers is <= the number of points, and the radius is bounded by the k-th
// term of r_1 = 1, r_{j+1} = r_j + dmin(r_j)/2.
//
// dmin must be positive and non-decreasing over the radii at which it is
// evaluated; a violation raises ContractViolationError.
CoveringResult covering(std::span<const std::complex<double>> points,
                        const std::function<double(double)>& dmin);

}  // namespace gef
