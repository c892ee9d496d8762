#pragma once

#include <cstdint>
#include <vector>

#include "qreg/quaternion.hpp"

namespace qreg {

/// splitmix64 stream.  Hand-rolled so the same seed gives the same samples
/// on every platform (std:: distributions are implementation-defined).
struct Rng {
  std::uint64_t state = 0;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * next_double(); }
};

/// Independent stream for sample #index of a seeded loop.  Parallel loops
/// draw one substream per index, so results do not depend on scheduling.
inline Rng substream(std::uint64_t seed, std::uint64_t index) {
  Rng mix(seed ^ (0x9e3779b97f4a7c15ULL + index * 0xbf58476d1ce4e5b9ULL));
  mix.next_u64();
  return mix;
}

/// Uniform in the solid 4-ball B(center, radius), by rejection.
inline Quaternion sample_ball(Rng& rng, const Quaternion& center, double radius) {
  for (;;) {
    Quaternion q{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                 rng.uniform(-1, 1)};
    if (q.norm_sq() <= 1.0) return center + q * radius;
  }
}

/// Uniform on the sphere S of imaginary units, by rejection + normalization.
inline ImaginaryUnit sample_unit(Rng& rng) {
  for (;;) {
    const double a = rng.uniform(-1, 1);
    const double b = rng.uniform(-1, 1);
    const double c = rng.uniform(-1, 1);
    const double n2 = a * a + b * b + c * c;
    if (n2 > 1e-8 && n2 <= 1.0) return ImaginaryUnit(a, b, c);
  }
}

/// n near-evenly spread points of S (golden-angle spiral).  Used wherever a
/// "for all I in S" statement is tested: deterministic and reproducible.
std::vector<ImaginaryUnit> fibonacci_sphere(std::size_t n);

} // namespace qreg
