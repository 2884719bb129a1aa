#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "confbound/geometry.hpp"
#include "confbound/quadrature.hpp"

namespace confbound {

/// Declaration order is the tie-break order of best_bound.
enum class BoundMethod { RFK, Makai, Hersch, TheoremA, AlphaRegular, ConvexKovalev, Variation, Gap, GapConvex };

struct Precondition {
  std::string name;
  bool satisfied = true;
  /// Hypotheses gate validity; advisory entries (e.g. "informative") do not.
  bool required = true;
};

/// One lower estimate. Values are in 1/length^2. Variation bounds estimate
/// lambda1(image) - lambda1(base); Gap bounds estimate lambda2 - lambda1.
struct BoundResult {
  BoundMethod method = BoundMethod::RFK;
  double alpha = 0.0;  // AlphaRegular only
  double value = 0.0;
  bool valid = false;
  std::vector<Precondition> preconditions;
  std::map<std::string, double> intermediates;

  std::string label() const;
  /// True for bounds on lambda1 itself (everything except Variation and the gaps).
  bool is_lambda1_bound() const;
  bool is_gap_bound() const;
};

std::string method_name(BoundMethod m);

/// j01^2 pi / area: the disc of equal area.
BoundResult bound_rfk(double image_area);

/// gamma / rho^2 with gamma = 1/4, or pi^2/4 for convex domains (Hersch).
BoundResult bound_makai(double rho, bool convex);

/// lambda1(base) / sup|phi'|^2. Throws InfiniteNorm when sup_norm is not finite.
BoundResult bound_theorem_a(double lambda1_base, double sup_norm);

/// 1 / (A^2 ||phi'||_alpha^2) with A the Poincare-Sobolev upper estimate at
/// r = 2 alpha / (alpha - 2) for a base of area base_area.
BoundResult bound_alpha_regular(double alpha, double base_area, double alpha_norm);

/// Distortion bound R_C exp(2 (R_O - R_C) D), D the log difference quotient
/// (1/R_I when R_I and R_C coincide to 1e-12 relative).
double kovalev_sup_bound(double ro, double ri, double rc);

/// j01^2 / R_C^2 exp(-4 (R_O - R_C) D).
BoundResult bound_convex_kovalev(double ro, double ri, double rc, bool map_fixes_origin = true);

/// (1 - S^2) / S^2 lambda1(base), a lower bound on lambda1(image) - lambda1(base)
/// when the image lies inside the base. Non-positive values are kept and
/// flagged uninformative.
BoundResult bound_variation(double lambda1_base, double sup_norm, bool image_in_base = true);

/// Relative tolerance on |image| = pi for the gap estimates.
inline constexpr double kGapAreaTolerance = 1e-3;

/// (j11^2 - j01^2) - (lambda_*^2 + 1) (j01^2/rho^2)^2 gamma_inf (S + 1) l2_dev,
/// S = kovalev_sup when given (GapConvex) else sup_norm (Gap). Throws
/// AreaMismatch when |image_area - pi| / pi > 1e-3.
BoundResult bound_gap(double sup_norm, double l2_dev, double rho, std::optional<double> kovalev_sup,
                      double image_area);

/// Largest valid lambda1 bound; ties go to the earlier method. Throws
/// NoValidBound.
BoundResult best_bound(std::span<const BoundResult> results);

struct CatalogueOptions {
  QuadratureConfig quad;
  std::vector<double> alphas{3.0, 4.0, 6.0, 10.0};
  /// Raster pitch for the inradius when the spec does not declare one.
  double raster_h = 1.0 / 128.0;
};

/// Every lambda1 estimate applicable to the spec: RFK, Makai (and Hersch when
/// convex radii are declared), TheoremA, the best AlphaRegular over the alpha
/// sweep, ConvexKovalev (declared radii), Variation (declared containment).
std::vector<BoundResult> lambda1_catalogue(const DomainSpec& spec, const CatalogueOptions& opts);

/// Gap and, with convex radii, GapConvex. Throws DomainError unless the base
/// is the unit disc.
std::vector<BoundResult> gap_catalogue(const DomainSpec& spec, const CatalogueOptions& opts);

/// Fixed CSV header and row format for bound reports.
inline constexpr const char* kBoundCsvHeader = "method,value,valid,preconditions,notes";
std::string to_csv_row(const BoundResult& r);

}  // namespace confbound
