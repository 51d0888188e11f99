#pragma once

// One seeded 64-bit stream for all randomness. Conversions to doubles are done
// here rather than with <random> distributions so streams are bit-identical
// across standard libraries.

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

#include "opmeans/matrix.hpp"

namespace opmeans {

class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  // Standard normal via Box-Muller.
  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t state_;
};

// Independent per-item seed derived from a base seed; order-free, so batches can be split.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  SplitMix64 mix(base ^ (0xD1B54A32D192ED03ULL * (index + 1)));
  return mix();
}

// Haar-ish random orthogonal matrix: modified Gram-Schmidt on a Gaussian matrix.
inline Matrix random_orthogonal(std::size_t n, SplitMix64& rng) {
  Matrix Q(n, n);
  for (double& x : Q.data()) x = rng.normal();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      double dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += Q(i, j) * Q(i, k);
      for (std::size_t i = 0; i < n; ++i) Q(i, j) -= dot * Q(i, k);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += Q(i, j) * Q(i, j);
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) Q(i, j) /= norm;
  }
  return Q;
}

}  // namespace opmeans
