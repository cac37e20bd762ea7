#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace vdo {

// Deterministic random stream backed by mt19937_64, whose output sequence is
// fixed by the C++ standard. Every draw function below is implemented on raw
// engine words rather than std::*_distribution, so a seed reproduces the
// exact same sequence of doubles on any platform and standard library.
//
// Draw costs (for replaying a stream in tests):
//   uniform()            one engine word
//   uniform(lo, hi)      one engine word
//   uniform_index(n)     one engine word, more only on rejection
//   normal()             exactly two uniforms (Box-Muller, no caching)
//   permutation(n)       n - 1 uniform_index draws (Fisher-Yates)
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  // Uniform double in [0, 1) with 53-bit resolution.
  double uniform();

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi);

  // Uniform integer in [0, n); n must be positive. Unbiased via rejection.
  std::uint64_t uniform_index(std::uint64_t n);

  // Standard normal deviate.
  double normal();

  // Uniform random permutation of 0..n-1.
  std::vector<std::size_t> permutation(std::size_t n);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace vdo
