#include "qreg/polyroots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qreg {

namespace {

std::complex<double> horner(const std::vector<double>& c, std::complex<double> z) {
  std::complex<double> p = 0.0;
  for (std::size_t n = c.size(); n-- > 0;) p = p * z + c[n];
  return p;
}

std::complex<double> horner_derivative(const std::vector<double>& c, std::complex<double> z) {
  std::complex<double> d = 0.0;
  for (std::size_t n = c.size(); n-- > 1;)
    d = d * z + c[n] * static_cast<double>(n);
  return d;
}

// A few Newton steps, accepted only while |p| decreases.
std::complex<double> polish(const std::vector<double>& c, std::complex<double> z) {
  double best = std::abs(horner(c, z));
  for (int iter = 0; iter < 16 && best > 0.0; ++iter) {
    const std::complex<double> d = horner_derivative(c, z);
    if (std::abs(d) == 0.0) break;
    const std::complex<double> step = horner(c, z) / d;
    const std::complex<double> next = z - step;
    const double val = std::abs(horner(c, next));
    if (!(val < best)) break;
    z = next;
    best = val;
  }
  return z;
}

} // namespace

std::vector<std::complex<double>> complex_roots(const std::vector<double>& coeffs,
                                                double residual_rel) {
  // Trim numerically-zero leading coefficients relative to the largest one.
  double max_abs = 0.0;
  for (double c : coeffs) max_abs = std::max(max_abs, std::abs(c));
  if (max_abs == 0.0) throw std::domain_error("zero function");
  std::size_t deg = coeffs.size() - 1;
  while (deg > 0 && std::abs(coeffs[deg]) <= 1e-14 * max_abs) --deg;
  if (deg == 0) return {};

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (std::size_t n = 0; n + 1 < deg; ++n) companion(n + 1, n) = 1.0;
  for (std::size_t n = 0; n < deg; ++n)
    companion(n, deg - 1) = -coeffs[n] / coeffs[deg];

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::domain_error("root finder failed to converge: eigensolver failure");

  std::vector<double> monomial(coeffs.begin(), coeffs.begin() + deg + 1);
  std::vector<std::complex<double>> roots;
  roots.reserve(deg);
  double coeff_sum = 0.0;
  for (double c : monomial) coeff_sum += std::abs(c);

  for (std::size_t n = 0; n < deg; ++n) {
    const std::complex<double> r = polish(monomial, solver.eigenvalues()(n));
    const double bound =
        residual_rel * coeff_sum * std::pow(std::max(1.0, std::abs(r)), static_cast<double>(deg));
    const double residual = std::abs(horner(monomial, r));
    if (!(residual <= bound)) {
      std::ostringstream msg;
      msg << "root finder failed to converge: |p(r)| = " << residual << " at r = (" << r.real()
          << ", " << r.imag() << "), bound " << bound << ", degree " << deg;
      throw std::domain_error(msg.str());
    }
    roots.push_back(r);
  }
  return roots;
}

} // namespace qreg
