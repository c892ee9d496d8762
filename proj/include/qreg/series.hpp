#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "qreg/config.hpp"
#include "qreg/quaternion.hpp"

namespace qreg {

/// Regular function given by its power series f(q) = sum q^n a_n, with the
/// coefficients on the right of the powers.  Two flavors:
///   polynomial — the list is the whole function (trailing zeros trimmed,
///                zero function = empty list);
///   truncated  — correct only modulo q^{order+1}, meaningful for
///                |q| < trust_radius.
class RegularSeries {
 public:
  RegularSeries() = default;

  static RegularSeries polynomial(std::vector<Quaternion> coeffs);
  static RegularSeries truncated(std::vector<Quaternion> coeffs, int order,
                                 double trust_radius = std::numeric_limits<double>::infinity());

  bool is_polynomial() const { return polynomial_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const;

  const std::vector<Quaternion>& coeffs() const { return coeffs_; }
  Quaternion coeff(std::size_t n) const {
    return n < coeffs_.size() ? coeffs_[n] : Quaternion{};
  }

  /// Degree of an exact polynomial; empty for the zero function or a
  /// truncated series.
  std::optional<int> degree() const;

  /// Truncation order; empty means exact (polynomial flavor).
  std::optional<int> order() const;

  double trust_radius() const { return trust_radius_; }

 private:
  std::vector<Quaternion> coeffs_;
  bool polynomial_ = true;
  int order_ = -1;
  double trust_radius_ = std::numeric_limits<double>::infinity();
};

/// Horner evaluation a_0 + q (a_1 + q (a_2 + ...)); valid because the
/// coefficients sit on the right and q commutes with its own powers.
Quaternion evaluate(const RegularSeries& f, const Quaternion& q);

/// scale(f, r) = sum |a_n| r^n; the scale factor behind every relative
/// zero-ness threshold in the library.
double series_scale(const RegularSeries& f, double r);

/// False when a truncated series is being evaluated outside its trust
/// radius (callers may warn; evaluation itself is still performed).
bool within_trust(const RegularSeries& f, double r);

/// Coefficient convolution c_n = sum a_k b_{n-k} (a on the left; order
/// matters in H).  polynomial x polynomial stays polynomial; any truncated
/// operand truncates the result at the smaller operand order.
RegularSeries regular_product(const RegularSeries& f, const RegularSeries& g);

/// f^c: componentwise quaternion conjugation of the coefficients.
RegularSeries regular_conjugate(const RegularSeries& f);

/// f^s = f * f^c = f^c * f; always real coefficients.  Throws logic_error
/// if the computed coefficients fail to be real (upstream corruption).
RegularSeries symmetrization(const RegularSeries& f);

/// Real coefficient list of a real-coefficient series (typically f^s).
std::vector<double> real_coeffs(const RegularSeries& f);

/// f^{-*}(q) = f^s(q)^{-1} f^c(q), defined off the zero set of f^s.
Quaternion reciprocal_pointwise(const RegularSeries& f, const Quaternion& q,
                                const Config& cfg = Config::defaults());

/// Series of f^{-*} through order M: invert the real series f^s by the
/// commutative recursion, then convolve with f^c.  Requires f(0) != 0.
RegularSeries reciprocal_series(const RegularSeries& f, int order,
                                const Config& cfg = Config::defaults());

/// T_f(q) = f^c(q)^{-1} q f^c(q); keeps q on its sphere x + y S.
Quaternion point_transform(const RegularSeries& f, const Quaternion& q,
                           const Config& cfg = Config::defaults());

struct EvalPair {
  Quaternion lhs;
  Quaternion rhs;
};

/// Both routes of (f*g)(q) = f(q) g(f(q)^{-1} q f(q)).
EvalPair product_eval_identity(const RegularSeries& f, const RegularSeries& g,
                               const Quaternion& q, const Config& cfg = Config::defaults());

/// Both routes of f^{-*}(q) = f(T_f(q))^{-1}.
EvalPair reciprocal_eval_identity(const RegularSeries& f, const Quaternion& q,
                                  const Config& cfg = Config::defaults());

} // namespace qreg
