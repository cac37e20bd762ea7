#include "vdo/rng.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "vdo/errors.hpp"

namespace vdo {

double RngStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
  return lo + uniform() * (hi - lo);
}

std::uint64_t RngStream::uniform_index(std::uint64_t n) {
  if (n == 0) throw ConfigError("uniform_index: n must be positive");
  const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  std::uint64_t r = engine_();
  while (r < threshold) r = engine_();
  return r % n;
}

double RngStream::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<std::size_t> RngStream::permutation(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(uniform_index(i));
    std::swap(p[i - 1], p[j]);
  }
  return p;
}

}  // namespace vdo
