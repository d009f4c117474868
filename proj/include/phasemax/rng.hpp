#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace phasemax {

// splitmix64 finalizer. Used to spread seed material and to derive
// independent per-trial seeds from index tuples.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Per-trial seed for grid cell (theta_idx, delta_idx) and trial index.
// Pure function of its arguments, so trials can run on any worker in any
// order and still see identical randomness.
inline std::uint64_t derive_seed(std::uint64_t master_seed,
                                 std::uint64_t theta_idx,
                                 std::uint64_t delta_idx,
                                 std::uint64_t trial_idx) {
  std::uint64_t h = mix64(master_seed);
  h = mix64(h ^ theta_idx);
  h = mix64(h ^ delta_idx);
  h = mix64(h ^ trial_idx);
  return h;
}

// Deterministic stream of N(0,1) draws: mt19937_64 + Box-Muller on 53-bit
// uniforms. mt19937_64 has a fully specified output sequence and we avoid
// std::normal_distribution (whose algorithm is implementation-defined),
// so a seed reproduces the same stream on every platform.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : eng_(seed) {}

  double standard_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform_open_closed();
    const double u2 = uniform_half_open();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  double normal(double sigma) { return sigma * standard_normal(); }

  // Uniform on (0, 1]; never 0, so log() above is finite.
  double uniform_open_closed() {
    return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform on [0, 1).
  double uniform_half_open() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace phasemax
