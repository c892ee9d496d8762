#include "qreg/series.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qreg/polyroots.hpp"

namespace qreg {

RegularSeries RegularSeries::polynomial(std::vector<Quaternion> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  RegularSeries f;
  f.coeffs_ = std::move(coeffs);
  f.polynomial_ = true;
  return f;
}

RegularSeries RegularSeries::truncated(std::vector<Quaternion> coeffs, int order,
                                       double trust_radius) {
  if (order < 0) throw std::invalid_argument("truncation order must be >= 0");
  if (!(trust_radius > 0.0)) throw std::invalid_argument("trust radius must be > 0");
  coeffs.resize(static_cast<std::size_t>(order) + 1, Quaternion{});
  RegularSeries f;
  f.coeffs_ = std::move(coeffs);
  f.polynomial_ = false;
  f.order_ = order;
  f.trust_radius_ = trust_radius;
  return f;
}

bool RegularSeries::is_constant() const {
  for (std::size_t n = 1; n < coeffs_.size(); ++n)
    if (!coeffs_[n].is_zero()) return false;
  return true;
}

std::optional<int> RegularSeries::degree() const {
  if (!polynomial_ || coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

std::optional<int> RegularSeries::order() const {
  if (polynomial_) return std::nullopt;
  return order_;
}

Quaternion evaluate(const RegularSeries& f, const Quaternion& q) {
  Quaternion acc;
  const auto& a = f.coeffs();
  for (std::size_t n = a.size(); n-- > 0;) acc = q * acc + a[n];
  return acc;
}

double series_scale(const RegularSeries& f, double r) {
  double s = 0.0;
  const auto& a = f.coeffs();
  for (std::size_t n = a.size(); n-- > 0;) s = s * r + a[n].norm();
  return s;
}

bool within_trust(const RegularSeries& f, double r) {
  return f.is_polynomial() || r < f.trust_radius();
}

namespace {

struct ResultMeta {
  bool polynomial;
  int order;
  double trust;
};

ResultMeta combine(const RegularSeries& f, const RegularSeries& g) {
  ResultMeta m;
  m.polynomial = f.is_polynomial() && g.is_polynomial();
  m.trust = std::min(f.trust_radius(), g.trust_radius());
  int order = -1;
  if (auto of = f.order()) order = *of;
  if (auto og = g.order()) order = order < 0 ? *og : std::min(order, *og);
  m.order = order;
  return m;
}

RegularSeries build(std::vector<Quaternion> coeffs, const ResultMeta& m) {
  if (m.polynomial) return RegularSeries::polynomial(std::move(coeffs));
  return RegularSeries::truncated(std::move(coeffs), m.order, m.trust);
}

} // namespace

RegularSeries regular_product(const RegularSeries& f, const RegularSeries& g) {
  const ResultMeta meta = combine(f, g);
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  if (a.empty() || b.empty()) return build({}, meta);
  std::vector<Quaternion> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return build(std::move(c), meta);
}

RegularSeries regular_conjugate(const RegularSeries& f) {
  std::vector<Quaternion> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(conjugate(a));
  return build(std::move(c), combine(f, f));
}

RegularSeries symmetrization(const RegularSeries& f) {
  const ResultMeta meta = combine(f, f);
  const auto& a = f.coeffs();
  if (a.empty()) return build({}, meta);
  std::vector<Quaternion> c(2 * a.size() - 1);
  std::vector<double> magnitude(c.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      c[i + j] += a[i] * conjugate(a[j]);
      magnitude[i + j] += a[i].norm() * a[j].norm();
    }
  for (std::size_t n = 0; n < c.size(); ++n) {
    const double imag = std::hypot(std::hypot(c[n].x, c[n].y), c[n].z);
    if (imag > 1e-9 * magnitude[n]) {
      std::ostringstream msg;
      msg << "symmetrization coefficient " << n << " is not real (|Im| = " << imag << ")";
      throw std::logic_error(msg.str());
    }
    c[n] = Quaternion{c[n].w}; // store exactly real
  }
  return build(std::move(c), meta);
}

std::vector<double> real_coeffs(const RegularSeries& f) {
  std::vector<double> r;
  r.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) {
    if (a.x != 0.0 || a.y != 0.0 || a.z != 0.0)
      throw std::logic_error("series does not have real coefficients");
    r.push_back(a.w);
  }
  return r;
}

namespace {

// |f^s(q)| threshold below which q counts as lying on the zero set.
double symmetrization_floor(const RegularSeries& f, const Quaternion& q, const Config& cfg) {
  return cfg.eps_eq * series_scale(f, q.norm());
}

} // namespace

Quaternion reciprocal_pointwise(const RegularSeries& f, const Quaternion& q,
                                const Config& cfg) {
  const Quaternion fs_val = evaluate(symmetrization(f), q);
  if (!(fs_val.norm() > symmetrization_floor(f, q, cfg)))
    throw std::domain_error("on zero set of symmetrization");
  return inverse(fs_val, cfg.eps_inv) * evaluate(regular_conjugate(f), q);
}

RegularSeries reciprocal_series(const RegularSeries& f, int order, const Config& cfg) {
  if (f.is_zero() || !(f.coeff(0).norm() > cfg.eps_eq))
    throw std::domain_error("reciprocal series undefined: f(0)=0");
  if (order < 0) throw std::invalid_argument("order must be >= 0");

  const RegularSeries fs = symmetrization(f);
  const std::vector<double> s = real_coeffs(fs);

  // Commutative series inversion of the real-coefficient f^s.
  std::vector<double> inv(static_cast<std::size_t>(order) + 1, 0.0);
  inv[0] = 1.0 / s[0];
  for (int n = 1; n <= order; ++n) {
    double acc = 0.0;
    const int kmax = std::min<int>(n, static_cast<int>(s.size()) - 1);
    for (int k = 1; k <= kmax; ++k) acc += s[k] * inv[n - k];
    inv[n] = -inv[0] * acc;
  }

  const RegularSeries fc = regular_conjugate(f);
  std::vector<Quaternion> c(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n)
    for (int k = 0; k <= n; ++k) c[n] += fc.coeff(n - k) * inv[k];

  double trust = f.trust_radius();
  if (f.is_polynomial()) {
    trust = std::numeric_limits<double>::infinity();
    if (s.size() > 1) {
      // Expansion is meaningful up to the nearest root sphere of f^s.
      for (const auto& root : complex_roots(s, cfg.root_residual_rel))
        trust = std::min(trust, std::abs(root));
    }
  }
  return RegularSeries::truncated(std::move(c), order, trust);
}

Quaternion point_transform(const RegularSeries& f, const Quaternion& q, const Config& cfg) {
  const Quaternion fs_val = evaluate(symmetrization(f), q);
  if (!(fs_val.norm() > symmetrization_floor(f, q, cfg)))
    throw std::domain_error("on zero set of symmetrization");
  const Quaternion fc_val = evaluate(regular_conjugate(f), q);
  return inverse(fc_val, cfg.eps_inv) * q * fc_val;
}

EvalPair product_eval_identity(const RegularSeries& f, const RegularSeries& g,
                               const Quaternion& q, const Config& cfg) {
  const Quaternion fq = evaluate(f, q);
  if (!(fq.norm() > cfg.eps_eq * series_scale(f, q.norm())))
    throw std::domain_error("f vanishes at q");
  EvalPair pair;
  pair.lhs = evaluate(regular_product(f, g), q);
  pair.rhs = fq * evaluate(g, inverse(fq, cfg.eps_inv) * q * fq);
  return pair;
}

EvalPair reciprocal_eval_identity(const RegularSeries& f, const Quaternion& q,
                                  const Config& cfg) {
  EvalPair pair;
  pair.lhs = reciprocal_pointwise(f, q, cfg);
  pair.rhs = inverse(evaluate(f, point_transform(f, q, cfg)), cfg.eps_inv);
  return pair;
}

} // namespace qreg
