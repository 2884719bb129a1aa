#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "confbound/geometry.hpp"

namespace confbound {

/// Composite product rules over base domains.
///
/// Rectangles: panels_per_axis^2 sub-rectangles, each with a tensor
/// Gauss-Legendre rule of nodes_per_axis^2 points.
/// Discs: panels_per_axis radial panels with disc_radial_nodes Gauss-Legendre
/// points each (weight r), times a midpoint trapezoid rule in angle with
/// disc_angular_nodes * panels_per_axis points.
struct QuadratureConfig {
  int nodes_per_axis = 16;
  int panels_per_axis = 8;
  int disc_radial_nodes = 32;
  int disc_angular_nodes = 64;
  /// Threads used for panel sums; results do not depend on this.
  int workers = 1;

  static constexpr std::size_t kMaxNodes = 100'000'000;

  /// Throws DomainError on non-positive counts or more than kMaxNodes points.
  void validate(const BaseDomain& base) const;
  std::size_t node_count(const BaseDomain& base) const;
  /// Same rule with panels_per_axis doubled.
  QuadratureConfig refined() const;
};

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule (Newton iteration on P_n), cached per n.
const GaussRule& gauss_legendre(int n);

/// Pairwise tree sum; fixed order for a given length.
double pairwise_sum(std::span<const double> values);

/// Integral of f over the base domain with the product rule described above.
/// f may throw; the first exception is rethrown after all workers join.
double integrate(const BaseDomain& base, const QuadratureConfig& quad,
                 const std::function<double(Complex)>& f);

}  // namespace confbound
