#include "gef/rng.hpp"

#include <cmath>

#include "gef/errors.hpp"

namespace gef {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t draw(std::uint64_t key, std::uint64_t counter) {
  return mix64(key + counter * kGolden);
}

double to_unit(std::uint64_t bits) {
  // 53 high bits, centered in the cell: strictly inside (0,1).
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  const std::uint64_t base = mix64(seed ^ 0x5851F42D4C957F2Dull);
  key_ = mix64(base + mix64(stream ^ 0x14057B7EF767814Full));
}

Rng Rng::from_key(std::uint64_t key) { return Rng(RawTag{}, key); }

std::uint64_t Rng::next_u64() { return draw(key_, counter_++); }

double Rng::next_unit() { return to_unit(next_u64()); }

double Rng::next_gaussian() {
  const double u1 = next_unit();
  const double u2 = next_unit();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::complex<double> Rng::next_complex_gaussian() {
  const double u1 = next_unit();
  const double u2 = next_unit();
  // |z|^2 ~ Exp(1), phase uniform: density (1/pi) e^{-|z|^2}.
  const double r = std::sqrt(-std::log(u1));
  return std::polar(r, 2.0 * M_PI * u2);
}

Rng Rng::substream(std::uint64_t id) const {
  return Rng(RawTag{}, mix64(key_ + mix64(id ^ 0xD1342543DE82EF95ull)));
}

std::complex<double> Rng::complex_gaussian_at(std::uint64_t key, std::uint64_t index) {
  const double u1 = to_unit(draw(key, 2 * index));
  const double u2 = to_unit(draw(key, 2 * index + 1));
  const double r = std::sqrt(-std::log(u1));
  return std::polar(r, 2.0 * M_PI * u2);
}

std::vector<std::complex<double>> sample_complex_gaussian(std::size_t n, Rng& rng) {
  if (n == 0) throw EmptyRequestError("sample_complex_gaussian: n must be >= 1");
  std::vector<std::complex<double>> out(n);
  for (auto& z : out) z = rng.next_complex_gaussian();
  return out;
}

}  // namespace gef
