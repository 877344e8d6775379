#include "gef/covering.hpp"

#include <cmath>
#include <limits>

#include "gef/errors.hpp"

namespace gef {

using cd = std::complex<double>;

CoveringResult covering(std::span<const cd> points, const std::function<double(double)>& dmin) {
  const int n = static_cast<int>(points.size());
  if (n == 0) throw ShapeError("covering: empty point set");

  double last_eval = -std::numeric_limits<double>::infinity();
  auto eval_dmin = [&](double r) {
    const double d = dmin(r);
    if (!(d > 0.0)) throw ContractViolationError("covering: dmin must be strictly positive");
    if (d < last_eval)
      throw ContractViolationError("covering: dmin must be non-decreasing");
    last_eval = d;
    return d;
  };

  CoveringResult res;
  res.centers.assign(points.begin(), points.end());
  res.radius = 1.0;
  res.assignment.resize(n);
  for (int i = 0; i < n; ++i) res.assignment[i] = i;

  for (;;) {
    const double need = eval_dmin(res.radius);
    // closest pair of current centers (ties broken by index order)
    int a = -1, b = -1;
    double best = std::numeric_limits<double>::infinity();
    const int m = static_cast<int>(res.centers.size());
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        const double d = std::abs(res.centers[i] - res.centers[j]);
        if (d < best) {
          best = d;
          a = i;
          b = j;
        }
      }
    if (m < 2 || best >= need) break;

    // merge b into a at the midpoint, grow the radius
    res.centers[a] = 0.5 * (res.centers[a] + res.centers[b]);
    res.centers.erase(res.centers.begin() + b);
    for (int& c : res.assignment) {
      if (c == b)
        c = a;
      else if (c > b)
        --c;
    }
    res.radius += 0.5 * need;
  }

  // Reassign each point to a disk that actually contains it (the merge
  // argument guarantees one exists).
  for (int i = 0; i < n; ++i) {
    int best_c = res.assignment[i];
    double best_d = std::abs(points[i] - res.centers[best_c]);
    for (int c = 0; c < static_cast<int>(res.centers.size()); ++c) {
      const double d = std::abs(points[i] - res.centers[c]);
      if (d < best_d) {
        best_d = d;
        best_c = c;
      }
    }
    res.assignment[i] = best_c;
  }
  return res;
}

}  // namespace gef
