#include "qreg/rng.hpp"

#include <cmath>
#include <numbers>

namespace qreg {

std::vector<ImaginaryUnit> fibonacci_sphere(std::size_t n) {
  std::vector<ImaginaryUnit> points;
  points.reserve(n);
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t m = 0; m < n; ++m) {
    const double z = 1.0 - 2.0 * (m + 0.5) / static_cast<double>(n);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double theta = golden_angle * static_cast<double>(m);
    points.emplace_back(r * std::cos(theta), r * std::sin(theta), z);
  }
  return points;
}

} // namespace qreg
