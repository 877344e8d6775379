#include "gef/permanent.hpp"

#include <bit>
#include <cstdint>
#include <vector>

#include "gef/errors.hpp"

namespace gef {

std::complex<double> permanent(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw ShapeError("permanent: matrix must be square");
  const int n = static_cast<int>(m.rows());
  if (n > 20) throw SizeLimitError("permanent: n <= 20 (cost 2^n)");
  if (n == 0) return 1.0;

  using cd = std::complex<double>;
  // per(M) = (-1)^n sum_{S != empty} (-1)^{|S|} prod_i sum_{j in S} M_ij
  std::vector<cd> row_sums(n, cd(0.0));
  cd total = 0.0;
  std::uint32_t prev_gray = 0;
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t g = 1; g < count; ++g) {
    const std::uint32_t gray = g ^ (g >> 1);
    const std::uint32_t diff = gray ^ prev_gray;
    const int j = std::countr_zero(diff);
    const double sgn_col = (gray & diff) ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) row_sums[i] += sgn_col * m(i, j);
    prev_gray = gray;

    cd prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= row_sums[i];
    const int bits = std::popcount(gray);
    total += ((bits % 2 == 0) ? 1.0 : -1.0) * prod;
  }
  return ((n % 2 == 0) ? 1.0 : -1.0) * total;
}

}  // namespace gef
