#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace gef {

// Counter-based random stream.  Every draw is a pure function of
// (key, counter), so disjoint substreams can run concurrently and any
// stream can be replayed bit-exactly from its key.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  // Rebuilds a stream from a previously recorded key (see key()).
  static Rng from_key(std::uint64_t key);

  std::uint64_t next_u64();
  double next_unit();      // uniform on (0,1), never exactly 0 or 1
  double next_gaussian();  // real N(0,1)

  // Standard complex Gaussian with density (1/pi) e^{-|z|^2}; E|z|^2 = 1.
  std::complex<double> next_complex_gaussian();

  // Independent stream addressed by id; stable under repeated calls.
  Rng substream(std::uint64_t id) const;

  std::uint64_t key() const { return key_; }

  // Stateless draw of the n-th complex Gaussian of the stream with this key.
  // A stream that only draws complex Gaussians produces exactly these values,
  // so extending a coefficient sequence keeps earlier draws unchanged.
  static std::complex<double> complex_gaussian_at(std::uint64_t key, std::uint64_t index);

 private:
  struct RawTag {};
  Rng(RawTag, std::uint64_t key) : key_(key) {}

  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

// n independent standard complex Gaussians.  n == 0 raises EmptyRequestError.
std::vector<std::complex<double>> sample_complex_gaussian(std::size_t n, Rng& rng);

}  // namespace gef
