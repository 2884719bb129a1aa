#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "confbound/analytic_map.hpp"

namespace confbound {

struct QuadratureConfig;

struct Rectangle {
  double x0, x1, y0, y1;
};

struct Disc {
  Complex center;
  double radius;
};

/// Canonical parameter domain: an open axis-aligned rectangle or an open disc.
class BaseDomain {
 public:
  /// Throws DomainError unless x0 < x1 and y0 < y1.
  static BaseDomain rectangle(double x0, double x1, double y0, double y1);
  /// Throws DomainError unless radius > 0.
  static BaseDomain disc(Complex center, double radius);
  static BaseDomain unit_disc() { return disc(0.0, 1.0); }

  bool is_rectangle() const { return std::holds_alternative<Rectangle>(shape_); }
  bool is_disc() const { return std::holds_alternative<Disc>(shape_); }
  bool is_unit_disc() const;
  const Rectangle& as_rectangle() const { return std::get<Rectangle>(shape_); }
  const Disc& as_disc() const { return std::get<Disc>(shape_); }

  bool contains(Complex z) const;
  Complex centroid() const;

  /// Points on the boundary, consecutive samples at most `spacing` apart.
  std::vector<Complex> boundary_samples(double spacing) const;

 private:
  explicit BaseDomain(std::variant<Rectangle, Disc> s) : shape_(s) {}
  std::variant<Rectangle, Disc> shape_;
};

struct ConvexRadii {
  double ro;  // outer
  double ri;  // inner
  double rc;  // curvature
};

/// Image domain phi(base). Optional fields carry caller-declared geometry.
struct DomainSpec {
  BaseDomain base = BaseDomain::unit_disc();
  AnalyticMap map;
  std::optional<double> inradius_override;
  std::optional<ConvexRadii> convex_radii;
  std::optional<double> area_override;
  /// Caller asserts phi(base) is contained in base (variation bound).
  bool image_in_base = false;

  /// Throws DomainError on violated field invariants.
  void validate() const;
};

/// Euclidean area of the base domain.
double area(const BaseDomain& base);

/// Area of phi(base) as the integral of |phi'|^2; area_override when set.
double image_area(const DomainSpec& spec, const QuadratureConfig& quad);

/// First Dirichlet eigenvalue: pi^2/a^2 + pi^2/b^2 (rectangle a x b) or
/// j01^2 / R^2 (disc).
double exact_lambda1(const BaseDomain& base);

/// j11^2, the second Dirichlet eigenvalue of the unit disc.
double exact_lambda2_disc();

/// Inradius of phi(base): the override when present, otherwise the peak of the
/// Euclidean distance transform of the raster at pitch h (O(h) accurate).
double inradius(const DomainSpec& spec, double h);

}  // namespace confbound
