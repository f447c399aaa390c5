#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace gmod {

// Deterministic random source. mt19937_64 has a pinned algorithm, but the
// standard distributions do not, so uniforms and gaussians are generated
// by hand to make every seed reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(mix(seed)), seed_material_(mix(seed)) {}

  /// Independent stream for a sub-task, stable under call-order changes.
  Rng derive(std::uint64_t salt) const {
    return Rng(seed_material_ ^ mix(salt * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL));
  }

  std::uint64_t bits() { return eng_(); }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller.
  double gaussian();

  /// Complex with independent standard normal parts.
  std::complex<double> gaussian_c() {
    double re = gaussian();
    return {re, gaussian()};
  }

  std::vector<std::complex<double>> gaussian_vec(std::size_t n);

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 eng_;
  std::uint64_t seed_material_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace gmod
