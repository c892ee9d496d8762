#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

namespace qreg {

/// Element of the skew field H, q = w + x i + y j + z k.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}
  /// Real quaternion.
  constexpr explicit Quaternion(double real) : w(real) {}

  constexpr bool operator==(const Quaternion&) const = default;

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }

  friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
  friend constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
  friend constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

  // Hamilton product, ij = -ji = k.
  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }

  constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }

  /// |q|, overflow/underflow safe.
  double norm() const { return std::hypot(std::hypot(w, x), std::hypot(y, z)); }

  constexpr bool is_zero() const { return w == 0.0 && x == 0.0 && y == 0.0 && z == 0.0; }

  static constexpr Quaternion one() { return {1, 0, 0, 0}; }
  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }
};

constexpr Quaternion conjugate(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

inline double norm(const Quaternion& q) { return q.norm(); }

/// q^-1 = conj(q) / |q|^2.  Throws for (near-)zero input.
inline Quaternion inverse(const Quaternion& q, double eps_inv = 1e-300) {
  if (!(q.norm() > eps_inv)) throw std::domain_error("non-invertible");
  return conjugate(q) / q.norm_sq();
}

/// Real part of the Hamilton product a*b without forming it.
constexpr double dot_real(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z;
}

/// Euclidean inner product of the imaginary parts.
constexpr double imag_dot(const Quaternion& a, const Quaternion& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Point of the unit sphere S = { q : q^2 = -1 } of imaginary units.
/// Construction normalizes, so I*I = -1 holds to strict tolerance.
struct ImaginaryUnit {
  double u1 = 1.0;
  double u2 = 0.0;
  double u3 = 0.0;

  ImaginaryUnit() = default;
  ImaginaryUnit(double a, double b, double c) {
    const double n = std::hypot(std::hypot(a, b), c);
    if (!(n > 0.0)) throw std::domain_error("imaginary unit cannot be zero");
    u1 = a / n;
    u2 = b / n;
    u3 = c / n;
  }

  constexpr Quaternion as_quaternion() const { return {0.0, u1, u2, u3}; }
  constexpr ImaginaryUnit antipode() const {
    ImaginaryUnit r;
    r.u1 = -u1; r.u2 = -u2; r.u3 = -u3;
    return r;
  }

  static ImaginaryUnit i() { return ImaginaryUnit(1, 0, 0); }
  static ImaginaryUnit j() { return ImaginaryUnit(0, 1, 0); }
  static ImaginaryUnit k() { return ImaginaryUnit(0, 0, 1); }
};

inline double dot(const ImaginaryUnit& a, const ImaginaryUnit& b) {
  return a.u1 * b.u1 + a.u2 * b.u2 + a.u3 * b.u3;
}

/// q = x + y I with y >= 0.  A real q lies in every slice, so no unit is
/// reported for it; callers that need one must choose it themselves.
struct SliceCoordinates {
  double x = 0.0;
  double y = 0.0;
  std::optional<ImaginaryUnit> unit;

  Quaternion reassemble() const {
    if (!unit) return Quaternion{x};
    return Quaternion{x} + unit->as_quaternion() * y;
  }
};

inline SliceCoordinates slice_decompose(const Quaternion& q) {
  SliceCoordinates s;
  s.x = q.w;
  s.y = std::hypot(std::hypot(q.x, q.y), q.z);
  if (s.y > 0.0) {
    ImaginaryUnit u;
    u.u1 = q.x / s.y;
    u.u2 = q.y / s.y;
    u.u3 = q.z / s.y;
    s.unit = u;
  }
  return s;
}

/// x + y I for an explicit unit.
inline Quaternion from_slice(double x, double y, const ImaginaryUnit& unit) {
  return Quaternion{x} + unit.as_quaternion() * y;
}

} // namespace qreg
