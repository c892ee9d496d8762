#pragma once

#include <complex>
#include <vector>

namespace qreg {

/// All complex roots (with multiplicity) of a real-coefficient polynomial
/// p(z) = sum coeffs[n] z^n, deg >= 1.  Companion-matrix eigenvalues with a
/// Newton polish; every returned root r satisfies
///   |p(r)| <= residual_rel * sum|coeffs| * max(1,|r|)^deg,
/// otherwise throws domain_error("root finder failed to converge").
std::vector<std::complex<double>> complex_roots(const std::vector<double>& coeffs,
                                                double residual_rel = 1e-8);

} // namespace qreg
