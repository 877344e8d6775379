#pragma once

#include <Eigen/Dense>
#include <complex>

namespace gef {

// Exact matrix permanent by Ryser's inclusion-exclusion with Gray-code row
// sum updates, O(2^n n).  n > 20 raises SizeLimitError; per(0x0) = 1.
std::complex<double> permanent(const Eigen::MatrixXcd& m);

}  // namespace gef
