#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "cgap/linalg.hpp"

namespace cgap {

// Deterministic random source.  Uniform and gaussian variates are derived
// from the raw mt19937_64 stream with fixed arithmetic (no std::*_distribution,
// whose output is implementation-defined), so identical seeds give identical
// streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller (one value per call; the pair's second
  // half is discarded to keep the stream position independent of usage).
  double gaussian() {
    const double u1 = 1.0 - uniform();  // (0, 1]: keeps log() finite
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  Vec gaussian_vec(int dim) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = gaussian();
    return v;
  }

  // Uniform direction on the unit sphere.
  Vec unit_vec(int dim) {
    for (;;) {
      Vec v = gaussian_vec(dim);
      const double n = v.norm();
      if (n > 1e-12) return v / n;
    }
  }

 private:
  std::mt19937_64 gen_;
};

// Stateless seed derivation (splitmix64 finalizer) for per-trial substreams.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t idx) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (idx + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace cgap
