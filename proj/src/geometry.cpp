#include "confbound/geometry.hpp"

#include <cmath>
#include <numbers>

#include "confbound/constants.hpp"
#include "confbound/errors.hpp"
#include "confbound/norms.hpp"
#include "confbound/quadrature.hpp"
#include "confbound/raster.hpp"

namespace confbound {

BaseDomain BaseDomain::rectangle(double x0, double x1, double y0, double y1) {
  if (!std::isfinite(x0) || !std::isfinite(x1) || !std::isfinite(y0) || !std::isfinite(y1)) {
    throw DomainError("rectangle: bounds must be finite");
  }
  if (!(x0 < x1) || !(y0 < y1)) throw DomainError("rectangle: requires x0 < x1 and y0 < y1");
  return BaseDomain(Rectangle{x0, x1, y0, y1});
}

BaseDomain BaseDomain::disc(Complex center, double radius) {
  if (!is_finite(center) || !std::isfinite(radius)) throw DomainError("disc: parameters must be finite");
  if (!(radius > 0.0)) throw DomainError("disc: radius must be positive");
  return BaseDomain(Disc{center, radius});
}

bool BaseDomain::is_unit_disc() const {
  return is_disc() && as_disc().center == Complex(0.0) && as_disc().radius == 1.0;
}

bool BaseDomain::contains(Complex z) const {
  if (is_rectangle()) {
    const Rectangle& r = as_rectangle();
    return z.real() > r.x0 && z.real() < r.x1 && z.imag() > r.y0 && z.imag() < r.y1;
  }
  const Disc& d = as_disc();
  return std::abs(z - d.center) < d.radius;
}

Complex BaseDomain::centroid() const {
  if (is_rectangle()) {
    const Rectangle& r = as_rectangle();
    return {0.5 * (r.x0 + r.x1), 0.5 * (r.y0 + r.y1)};
  }
  return as_disc().center;
}

std::vector<Complex> BaseDomain::boundary_samples(double spacing) const {
  if (!(spacing > 0.0)) throw DomainError("boundary_samples: spacing must be positive");
  std::vector<Complex> out;
  auto segment = [&](Complex a, Complex b) {
    const auto n = static_cast<long>(std::ceil(std::abs(b - a) / spacing));
    for (long k = 0; k < n; ++k) out.push_back(a + (b - a) * (static_cast<double>(k) / static_cast<double>(n)));
  };
  if (is_rectangle()) {
    const Rectangle& r = as_rectangle();
    segment({r.x0, r.y0}, {r.x1, r.y0});
    segment({r.x1, r.y0}, {r.x1, r.y1});
    segment({r.x1, r.y1}, {r.x0, r.y1});
    segment({r.x0, r.y1}, {r.x0, r.y0});
    return out;
  }
  const Disc& d = as_disc();
  const auto n = std::max(8L, static_cast<long>(std::ceil(2.0 * std::numbers::pi * d.radius / spacing)));
  out.reserve(static_cast<std::size_t>(n));
  for (long k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    out.push_back(d.center + d.radius * Complex(std::cos(t), std::sin(t)));
  }
  return out;
}

void DomainSpec::validate() const {
  if (inradius_override && !(*inradius_override > 0.0 && std::isfinite(*inradius_override))) {
    throw DomainError("domain spec: inradius must be positive");
  }
  if (area_override && !(*area_override > 0.0 && std::isfinite(*area_override))) {
    throw DomainError("domain spec: area must be positive");
  }
  if (convex_radii) {
    const ConvexRadii& c = *convex_radii;
    if (!(c.ro > 0.0 && c.ri > 0.0 && c.rc > 0.0)) throw DomainError("convex radii must all be positive");
    if (!(c.ri <= c.ro) || !(c.rc <= c.ro)) throw DomainError("convex radii require R_I <= R_O and R_C <= R_O");
  }
}

double area(const BaseDomain& base) {
  if (base.is_rectangle()) {
    const Rectangle& r = base.as_rectangle();
    return (r.x1 - r.x0) * (r.y1 - r.y0);
  }
  const double r = base.as_disc().radius;
  return std::numbers::pi * r * r;
}

double image_area(const DomainSpec& spec, const QuadratureConfig& quad) {
  if (spec.area_override) return *spec.area_override;
  const double n = norm_alpha(spec.map, spec.base, 2.0, quad).value;
  return n * n;
}

double exact_lambda1(const BaseDomain& base) {
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  if (base.is_rectangle()) {
    const Rectangle& r = base.as_rectangle();
    const double a = r.x1 - r.x0;
    const double b = r.y1 - r.y0;
    return pi2 / (a * a) + pi2 / (b * b);
  }
  const double rad = base.as_disc().radius;
  return j01() * j01() / (rad * rad);
}

double exact_lambda2_disc() { return j11() * j11(); }

double inradius(const DomainSpec& spec, double h) {
  if (spec.inradius_override) return *spec.inradius_override;
  return raster_inradius(rasterize(spec, h));
}

}  // namespace confbound
