#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qreg {

/// One flat record holding every tolerance, seed and sample-count default.
/// All notions of "equal", "zero" and "converged" used by the library are
/// defined here, so they can be audited in one place (`qreg config` prints
/// the active values).  Thresholds named *_rel are relative to a scale
/// factor computed at the point of use, typically scale(f, r) = sum |a_n| r^n.
struct Config {
  // Semantic comparisons.
  double eps_eq = 1e-9;      // "values are equal" / "value is zero"
  double eps_strict = 1e-12; // algebraic identities, coefficient equality
  double eps_inv = 1e-300;   // |q| above this is invertible

  // Zero sets and root finding.
  double zero_residual_rel = 1e-8;    // accepted |f| at a reported zero
  double root_residual_rel = 1e-8;    // accepted |p(r)| for a polynomial root
  double root_dedup = 1e-7;           // sphere parameters closer than this collapse
  double sphere_membership_tol = 1e-6; // how close -b*c^-1 must be to the unit sphere

  // Analysis harnesses.
  double degenerate_tol = 1e-9;   // |c| below tol*scale marks a candidate sphere
  double guard_band_rel = 1e-6;   // skip identity checks where |f^s| < band*scale
  double min_modulus_rel = 1e-6;  // an interior minimum must have |f| <= this*scale
  double gradient_tol_rel = 1e-5; // first-order condition on |f|^2 at a minimum
  double solve_residual_rel = 1e-8; // |f(q)-p| below this counts as solved
  double coverage_fail_factor = 100.0; // residual above factor*tol is a strong miss
  double fd_step_rel = 1e-6;      // central-difference step h = rel*(1+|q|)
  double identity_tol = 1e-9;     // pass threshold for the identity suite
  double sample_radius = 1.5;     // ball radius for random identity-check points

  // Seeded-operation defaults (CLI flags and env override these).
  std::uint64_t seed = 42;
  int samples = 10000;
  int probes = 200;
  double epsilon = 0.01;
  int reciprocal_order = 32;
  double search_radius = 2.0;

  static const Config& defaults();

  /// defaults() with QREG_* environment overrides applied
  /// (e.g. QREG_SEED=7, QREG_EPS_EQ=1e-10).
  static Config from_env();
};

/// Name/value view over the flat record, shared by the env reader and the
/// `config` subcommand printer.
struct ConfigField {
  const char* name; // lower-case field name; env var is QREG_ + upper-case
  enum class Kind { real, integer, seed } kind;
  std::function<double(const Config&)> get;
  std::function<void(Config&, double)> set;
};

const std::vector<ConfigField>& config_fields();

} // namespace qreg
