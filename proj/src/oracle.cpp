#include "confbound/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "confbound/errors.hpp"

namespace confbound {

ValidationReport validate(const DomainSpec& spec, std::span<const BoundResult> bounds, double h,
                          const ValidateOptions& opts) {
  if (!(h > 0.0)) throw DomainError("validate: h must be positive");
  const bool want_gap = std::any_of(bounds.begin(), bounds.end(), [](const BoundResult& b) { return b.is_gap_bound(); });
  const int k = want_gap ? 2 : 1;

  ValidationReport rep;
  FdOptions fd;
  fd.workers = opts.workers;
  rep.coarse = fd_eigenvalues(rasterize(spec, h, opts.samples_per_cell), k, opts.tol, fd);
  // The coarse spectrum is a safe shift for the finer grid.
  fd.shift = 0.8 * rep.coarse.eigenvalues[0];
  rep.fine = fd_eigenvalues(rasterize(spec, 0.5 * h, opts.samples_per_cell), k, opts.tol, fd);

  rep.lambda1 = richardson(rep.coarse.eigenvalues[0], rep.fine.eigenvalues[0]);
  if (k == 2) rep.lambda2 = richardson(rep.coarse.eigenvalues[1], rep.fine.eigenvalues[1]);
  rep.eps_grid = std::max(std::abs(rep.coarse.eigenvalues[0] - rep.fine.eigenvalues[0]) / rep.lambda1, 1e-6);

  const double lam_base = exact_lambda1(spec.base);
  for (const BoundResult& b : bounds) {
    BoundCheck c;
    c.label = b.label();
    c.method = b.method;
    c.bound = b.value;
    double scale = rep.lambda1;
    if (b.is_gap_bound()) {
      c.reference = *rep.lambda2 - rep.lambda1;
      scale = *rep.lambda2;
    } else if (b.method == BoundMethod::Variation) {
      c.reference = rep.lambda1 - lam_base;
    } else {
      c.reference = rep.lambda1;
    }
    c.tightness = c.bound / c.reference;
    c.checked = b.valid;
    c.pass = !b.valid || c.bound <= c.reference + rep.eps_grid * scale;
    rep.all_pass = rep.all_pass && c.pass;
    rep.checks.push_back(c);
  }
  return rep;
}

BumpDisc inscribed_bump_disc(const AnalyticMap& map, const BaseDomain& base) {
  const Complex w0 = map(base.centroid());
  double extent;
  if (base.is_rectangle()) {
    const Rectangle& r = base.as_rectangle();
    extent = std::min(r.x1 - r.x0, r.y1 - r.y0);
  } else {
    extent = base.as_disc().radius;
  }
  double dist = std::numeric_limits<double>::infinity();
  for (Complex z : base.boundary_samples(extent / 4096.0)) dist = std::min(dist, std::abs(map(z) - w0));
  return {w0, 0.95 * dist};
}

namespace {

// |grad f|^2 for the bump of the given disc; cut to 0 where f^2 < e^-198.
double bump_grad_sq(Complex w, const BumpDisc& d) {
  const double r2 = d.radius * d.radius;
  const double dist2 = std::norm(w - d.center);
  const double gap = 1.0 - dist2 / r2;
  if (gap < 1e-2) return 0.0;
  const double f = std::exp(1.0 - 1.0 / gap);
  const double g = f * 2.0 * std::sqrt(dist2) / (r2 * gap * gap);
  return g * g;
}

}  // namespace

double energy_isometry_check(const AnalyticMap& map, const BaseDomain& base, const QuadratureConfig& quad,
                             std::optional<BumpDisc> disc) {
  const BumpDisc d = disc ? *disc : inscribed_bump_disc(map, base);
  if (!(d.radius > 0.0)) throw DomainError("energy_isometry_check: bump radius must be positive");
  const double target =
      integrate(BaseDomain::disc(d.center, d.radius), quad, [&](Complex w) { return bump_grad_sq(w, d); });
  const double pulled = integrate(base, quad, [&](Complex z) {
    const auto [w, dw] = map.value_and_derivative(z);
    return bump_grad_sq(w, d) * std::norm(dw);
  });
  return std::abs(target - pulled) / target;
}

}  // namespace confbound
