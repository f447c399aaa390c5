#include "gmod/rng.hpp"

#include <cmath>

namespace gmod {

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 6.283185307179586476925286766559 * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

std::vector<std::complex<double>> Rng::gaussian_vec(std::size_t n) {
  std::vector<std::complex<double>> v(n);
  for (auto& z : v) z = gaussian_c();
  return v;
}

std::uint64_t Rng::below(std::uint64_t n) {
  // rejection sampling keeps the result unbiased
  std::uint64_t limit = n * ((~0ULL) / n);
  std::uint64_t x = bits();
  while (x >= limit) x = bits();
  return x % n;
}

}  // namespace gmod
