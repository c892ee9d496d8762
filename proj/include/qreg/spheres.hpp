#pragma once

#include "qreg/config.hpp"
#include "qreg/quaternion.hpp"
#include "qreg/series.hpp"

namespace qreg {

/// The orbit x + y S: a 2-sphere when y > 0, the real singleton {x} when
/// y = 0.  Construction folds negative y (x + y S = x - y S).
struct Sphere2 {
  double x = 0.0;
  double y = 0.0;

  Sphere2() = default;
  Sphere2(double x_, double y_) : x(x_), y(y_ < 0 ? -y_ : y_) {}

  /// |x + y I|, the common modulus of all points of the orbit.
  double radius() const { return std::hypot(x, y); }

  bool is_real_point() const { return y == 0.0; }

  Quaternion point(const ImaginaryUnit& unit) const { return from_slice(x, y, unit); }
};

/// Distance from q to the orbit x + y S, measured in the (x, y) half-plane.
double sphere_distance(const Quaternion& q, const Sphere2& s);

/// f restricted to a sphere: f(x + yI) = b + I c for all I.
struct SphericalValue {
  Quaternion b;
  Quaternion c;
  Sphere2 sphere;
};

/// Computes (b, c) from the coefficients via the complex power recurrence
/// (x_{n+1} + i y_{n+1}) = (x_n + i y_n)(x + i y), then b = sum x_n a_n,
/// c = sum y_n a_n.
SphericalValue spherical_split(const RegularSeries& f, const Sphere2& s);

/// b + I c (I on the left of c).
Quaternion value_at(const SphericalValue& v, const ImaginaryUnit& I);

/// True iff f is constant on the sphere: |c| <= tol * scale(f, radius).
/// Only defined for genuine spheres (y > 0); throws otherwise.
bool is_degenerate(const RegularSeries& f, const Sphere2& s, double tol,
                   const Config& cfg = Config::defaults());

/// Zero classification of f on one sphere.  A non-degenerate sphere holds
/// at most one zero, at I* = -b c^{-1} when that lies on S.
struct ZeroOnSphere {
  enum class Kind { none, point, whole_sphere };
  Kind kind = Kind::none;
  Quaternion point; // set iff kind == point
  double residual = 0.0; // |b + I c| at the classification witness
};

/// zero_scale fixes the magnitude against which b and c count as zero
/// (pass scale(f, radius); defaults to |b| + |c| when negative).
ZeroOnSphere sphere_zero(const SphericalValue& v, double zero_scale = -1.0,
                         const Config& cfg = Config::defaults());

/// Extrema of |f| on the sphere from the closed form
///   |b + I c|^2 = |b|^2 + |c|^2 - 2 <I, Im(c conj(b))>,
/// so the minimum sits at I = Im(c conj(b)) normalized and the maximum at
/// its antipode.  When Im(c conj(b)) = 0 the modulus is constant and the
/// reported locations are arbitrary.
struct ExtremaReport {
  ImaginaryUnit min_at;
  double min_value = 0.0;
  ImaginaryUnit max_at;
  double max_value = 0.0;
  bool constant_modulus = false;
};

ExtremaReport modulus_extrema(const SphericalValue& v,
                              const Config& cfg = Config::defaults());

} // namespace qreg
