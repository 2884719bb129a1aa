#pragma once

#include <optional>
#include <vector>

#include "confbound/analytic_map.hpp"
#include "confbound/geometry.hpp"
#include "confbound/quadrature.hpp"

namespace confbound {

/// A norm of phi' over the base domain. alpha is +infinity for the sup norm.
struct NormReport {
  double value = 0.0;
  double alpha = 0.0;
  /// |coarse - fine| / fine between panel counts P and 2P.
  double estimated_rel_error = 0.0;
  std::size_t node_count = 0;
};

/// Refinements disagreeing by more than this flag divergence.
inline constexpr double kDivergenceThreshold = 0.5;

/// (integral over base of |phi'|^alpha)^(1/alpha), alpha >= 1, evaluated at
/// panels P and 2P; the finer value is returned. Throws QuadratureDivergence
/// when the two integrals differ by more than 50%.
NormReport norm_alpha(const AnalyticMap& map, const BaseDomain& base, double alpha, const QuadratureConfig& quad);

/// Essential supremum of |phi'| over the base closure. Closed forms for
/// exp / sin / affine / identity on rectangles (affine and identity on discs
/// too); otherwise a 512 x 512 sample grid plus 20 pattern-search steps.
double norm_sup(const AnalyticMap& map, const BaseDomain& base);

/// Grid-and-pattern-search path of norm_sup without closed-form shortcuts.
double norm_sup_sampled(const AnalyticMap& map, const BaseDomain& base);

/// (integral over the unit disc of |phi' - 1|^2)^(1/2).
double norm_l2_dev(const AnalyticMap& map, const QuadratureConfig& quad);

struct RegularityEntry {
  double alpha;
  bool finite;
  std::optional<double> value;
};

struct RegularityProfile {
  std::vector<RegularityEntry> entries;
  /// Some alpha > 2 produced a converged norm.
  bool conformal_regular = false;
};

/// norm_alpha for each alpha (> 2, else DomainError); divergence is recorded,
/// not thrown.
RegularityProfile regularity_profile(const AnalyticMap& map, const BaseDomain& base,
                                     const std::vector<double>& alphas, const QuadratureConfig& quad);

/// Conformal radius of the unit disc, 1 - |w|^2.
inline double unit_disc_conformal_radius(Complex w) { return 1.0 - std::norm(w); }

/// (integral over the unit disc of (R_Omega(phi(w)) / R_D(w))^alpha)^(1/alpha),
/// with R_Omega(phi(w)) = |phi'(w)| R_D(w).
double radius_ratio_norm(const AnalyticMap& map, double alpha, const QuadratureConfig& quad);

}  // namespace confbound
