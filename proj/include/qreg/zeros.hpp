#pragma once

#include <string>
#include <vector>

#include "qreg/config.hpp"
#include "qreg/quaternion.hpp"
#include "qreg/series.hpp"
#include "qreg/spheres.hpp"

namespace qreg {

/// Full zero set of a regular function inside a ball: isolated points and
/// whole zero spheres, each with its scale-relative residual.
struct ZeroSet {
  std::vector<Quaternion> isolated_points;
  std::vector<Sphere2> zero_spheres;
  /// |f(.)| / scale per entry, points first then spheres (max over sampled
  /// units for a sphere).
  std::vector<double> residuals;
  /// Spheres of f^s that classified as carrying no zero of f; should be
  /// empty, their presence signals numeric failure upstream.
  std::vector<Sphere2> spurious;
  /// True when f is truncated: only zeros inside the search radius are
  /// certified, and only approximately.
  bool approximate = false;
};

/// Root spheres of the symmetrization: restrict the real-coefficient f^s to
/// the standard complex slice, find all roots with |root| < search_radius,
/// pair conjugates and canonicalize to (x, y >= 0).  Deduplicates within
/// cfg.root_dedup.
std::vector<Sphere2> symmetrization_root_spheres(const RegularSeries& f,
                                                 double search_radius,
                                                 const Config& cfg = Config::defaults());

/// Classifies every root sphere of f^s via spherical_split + sphere_zero.
ZeroSet zero_set(const RegularSeries& f, double search_radius,
                 const Config& cfg = Config::defaults());

/// Zero classification of f and f^c on one sphere; the counts agree for
/// every sphere (the zero sets correspond one-to-one).
struct ConjugateZeroCheck {
  ZeroOnSphere::Kind count_f;
  ZeroOnSphere::Kind count_fc;
  bool equal() const { return count_f == count_fc; }
};

ConjugateZeroCheck conjugate_zero_check(const RegularSeries& f, const Sphere2& s,
                                        const Config& cfg = Config::defaults());

} // namespace qreg
