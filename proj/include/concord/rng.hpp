#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace concord {

/// Seeded generator with distribution helpers that are defined purely in
/// terms of the mt19937_64 bit stream, so identical seeds give identical
/// draws on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Modulo bias is irrelevant for the small n used here.
    return engine_() % n;
  }

  /// Standard normal via Box-Muller.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  /// Draws index i with probability weights[i] / sum(weights).
  template <class Container>
  std::size_t categorical(const Container& weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double r = uniform() * total;
    std::size_t last = 0;
    std::size_t i = 0;
    for (double w : weights) {
      r -= w;
      if (r < 0.0) return i;
      last = i;
      ++i;
    }
    return last;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace concord
