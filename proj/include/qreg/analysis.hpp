#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qreg/config.hpp"
#include "qreg/parallel.hpp"
#include "qreg/quaternion.hpp"
#include "qreg/series.hpp"
#include "qreg/spheres.hpp"

namespace qreg {

/// Rectangular sampling grid over the (x, y) half-plane of sphere
/// parameters; at least 2 samples per axis, y >= 0.
struct GridSpec {
  double x0, x1;
  double y0, y1;
  int nx, ny;

  GridSpec(double x0_, double x1_, double y0_, double y1_, int nx_, int ny_);

  double x_at(int ix) const { return x0 + (x1 - x0) * ix / (nx - 1); }
  double y_at(int iy) const { return y0 + (y1 - y0) * iy / (ny - 1); }
  std::size_t cells() const { return static_cast<std::size_t>(nx) * ny; }
  std::size_t index(int ix, int iy) const { return static_cast<std::size_t>(iy) * nx + ix; }
  double max_radius() const;
};

/// |c(x, y)| field over a grid plus the refined sub-tolerance candidates.
/// Candidate spheres form curves for non-constant f (the degenerate set has
/// empty interior); y = 0 rows are never candidates (not spheres).
struct DegenerateScan {
  GridSpec grid;
  double tol;
  std::vector<double> abs_c; // row-major, grid.index(ix, iy)
  std::vector<Sphere2> candidates;
};

DegenerateScan degenerate_scan(const RegularSeries& f, const GridSpec& grid, double tol,
                               const Config& cfg = Config::defaults(),
                               Exec exec = Exec::parallel);

/// |f(x + y I)| field on a fixed slice, for modulus landscapes.
struct ModulusScan {
  GridSpec grid;
  ImaginaryUnit unit;
  std::vector<double> abs_f;
};

ModulusScan modulus_scan(const RegularSeries& f, const GridSpec& grid,
                         const ImaginaryUnit& unit,
                         const Config& cfg = Config::defaults(),
                         Exec exec = Exec::parallel);

/// Seeded sampling + local ascent on |f|^2.  Contract: every ascent leaves
/// the ball; an ascent that stalls at an interior local maximum is reported
/// as a violation.
struct MaxModulusReport {
  enum class Verdict { pass, violation, constant_function };
  Verdict verdict = Verdict::pass;
  double ball_radius = 0.0;
  int samples = 0;
  std::uint64_t seed = 0;
  int ascents = 0;
  int reached_boundary = 0;
  struct InteriorMax {
    Quaternion q;
    double abs_f;
    double grad_norm;
  };
  std::vector<InteriorMax> violations;
};

MaxModulusReport check_max_modulus(const RegularSeries& f, double ball_radius,
                                   int n_samples, std::uint64_t seed,
                                   const Config& cfg = Config::defaults(),
                                   Exec exec = Exec::parallel);

/// Seeded sampling + descent refinement on |f|^2.  Contract: every refined
/// interior local minimum is a zero (|f| <= min_modulus_rel * scale).
struct MinModulusReport {
  enum class Verdict { pass, violation, constant_function };
  Verdict verdict = Verdict::pass;
  double ball_radius = 0.0;
  int samples = 0;
  std::uint64_t seed = 0;
  int descents = 0;
  int exited = 0;
  struct Minimum {
    Quaternion q;
    double abs_f;
    double scale;
    double grad_norm;
    bool is_zero;
  };
  std::vector<Minimum> interior_minima;
};

MinModulusReport check_min_modulus(const RegularSeries& f, double ball_radius,
                                   int n_samples, std::uint64_t seed,
                                   const Config& cfg = Config::defaults(),
                                   Exec exec = Exec::parallel);

/// Probe region: a solid ball B(center, r) or a circular neighborhood
/// C(S, r) = { q : d(q, S) < r } of a sphere.
struct Region {
  enum class Kind { ball, circular };
  Kind kind = Kind::ball;
  Quaternion center;
  Sphere2 sphere;
  double radius = 0.0;

  static Region ball(const Quaternion& center, double r);
  static Region circular(const Sphere2& s, double r);

  bool contains(const Quaternion& q) const;
  /// Representative interior point (ball center, or x + y i for C(S, r)).
  Quaternion center_point() const;
  /// Upper bound on |q| over the region (trust-radius check).
  double max_modulus() const;
};

/// Evidence that f(region) covers a ball around p0 = f(center): each probe
/// target is attacked by multi-start damped least-squares on |f(q) - p|^2.
struct CoverageReport {
  enum class Verdict { covered, not_covered, inconclusive };
  Quaternion target_center;
  double epsilon = 0.0;
  int probes = 0;
  int solved = 0;
  int failed = 0; // residual stuck well above tolerance: strong miss
  double max_residual = 0.0;
  Verdict verdict = Verdict::inconclusive;
  std::uint64_t seed = 0;
  struct Probe {
    Quaternion target;
    Quaternion solution;
    double residual;
    bool solved;
  };
  std::vector<Probe> results;
};

CoverageReport open_mapping_probe(const RegularSeries& f, const Region& region,
                                  double epsilon, int n_probes, std::uint64_t seed,
                                  const Config& cfg = Config::defaults(),
                                  Exec exec = Exec::parallel);

/// Same machinery with caller-chosen targets (e.g. targets confined to one
/// slice of the codomain).
CoverageReport open_mapping_probe_targets(const RegularSeries& f, const Region& region,
                                          const std::vector<Quaternion>& targets,
                                          std::uint64_t seed,
                                          const Config& cfg = Config::defaults(),
                                          Exec exec = Exec::parallel);

/// The q^2 + 1 witness: the image of B(I, 1/2) contains 0 but meets the
/// slice L_K (K orthogonal to I) only in real points, so it is not open.
struct WitnessReport {
  double f_at_unit_residual = 0.0; // |f(I)|, the zero in the image
  int samples = 0;
  int in_plane = 0; // samples with f(q) within tol of L_K
  double max_violating_component = 0.0; // largest |<f(q), K>| among those
  bool holds = false;
  std::uint64_t seed = 0;
};

WitnessReport counterexample_witness(const ImaginaryUnit& I, const ImaginaryUnit& K,
                                     int n_samples, std::uint64_t seed,
                                     const Config& cfg = Config::defaults(),
                                     Exec exec = Exec::parallel);

/// One pointwise identity checked at seeded random points.
struct IdentityCheck {
  std::string name;
  int evaluated = 0;
  int skipped = 0;
  double max_rel_dev = 0.0;
  bool ran = true; // false when a precondition rules the check out entirely
};

struct IdentitySuiteReport {
  std::uint64_t seed = 0;
  int points = 0;
  std::vector<IdentityCheck> checks;

  double worst() const;
  bool pass(double tol) const;
};

/// Runs the product-evaluation, reciprocal-evaluation, transform-inverse,
/// spherical-value and reciprocal-series identities at seeded points,
/// skipping points inside the guard band around the zero set of f^s.
IdentitySuiteReport identity_suite(const RegularSeries& f, const RegularSeries& g,
                                   int n_points, std::uint64_t seed,
                                   const Config& cfg = Config::defaults(),
                                   Exec exec = Exec::parallel);

} // namespace qreg
