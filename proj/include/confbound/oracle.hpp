#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "confbound/bounds.hpp"
#include "confbound/eigensolver.hpp"
#include "confbound/geometry.hpp"
#include "confbound/quadrature.hpp"
#include "confbound/raster.hpp"

namespace confbound {

struct BoundCheck {
  std::string label;
  BoundMethod method = BoundMethod::RFK;
  double bound = 0.0;
  /// Quantity the bound is compared against (lambda1, lambda1 - lambda1(base),
  /// or lambda2 - lambda1, all extrapolated).
  double reference = 0.0;
  double tightness = 0.0;  // bound / reference
  bool checked = false;    // invalid bounds are listed but not checked
  bool pass = false;
};

struct ValidationReport {
  OracleResult coarse;  // pitch h
  OracleResult fine;    // pitch h/2
  double lambda1 = 0.0;
  std::optional<double> lambda2;
  /// Relative grid error band: |lambda1(h) - lambda1(h/2)| / lambda1, floored at 1e-6.
  double eps_grid = 0.0;
  std::vector<BoundCheck> checks;
  bool all_pass = true;
};

/// Second-order Richardson extrapolation from pitches h and h/2.
inline double richardson(double coarse, double fine) { return (4.0 * fine - coarse) / 3.0; }

struct ValidateOptions {
  double tol = 1e-8;
  int samples_per_cell = kDefaultSamplesPerCell;
  int workers = 1;
};

/// Solves the discrete problem at h and h/2 (two eigenvalues when a gap
/// bound is present), extrapolates, and checks every valid bound:
/// bound <= reference + eps_grid * lambda_ext.
ValidationReport validate(const DomainSpec& spec, std::span<const BoundResult> bounds, double h,
                          const ValidateOptions& opts = {});

struct BumpDisc {
  Complex center;
  double radius;
};

/// Disc inside phi(base): centred on phi(centroid), radius 0.95 times the
/// distance to the sampled boundary image.
BumpDisc inscribed_bump_disc(const AnalyticMap& map, const BaseDomain& base);

/// Relative difference between the Dirichlet energy of the bump
/// f(w) = exp(1 - 1/(1 - |w - c|^2 / r^2)) on the image and the energy of
/// f o phi on the base (gradient by the chain rule, |grad(f o phi)| = |grad f| |phi'|).
/// The bump is steep near its rim: 32 Gauss nodes per panel resolve it to
/// about 1e-8 on the shipped examples, where the general default gives 1e-5.
inline QuadratureConfig energy_check_quadrature() {
  QuadratureConfig q;
  q.nodes_per_axis = 32;
  q.disc_radial_nodes = 64;
  q.disc_angular_nodes = 128;
  return q;
}

double energy_isometry_check(const AnalyticMap& map, const BaseDomain& base, const QuadratureConfig& quad,
                             std::optional<BumpDisc> disc = std::nullopt);

}  // namespace confbound
