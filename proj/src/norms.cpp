#include "confbound/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "confbound/errors.hpp"

namespace confbound {

namespace {

struct TwoLevel {
  double coarse;
  double fine;
  std::size_t nodes;
};

TwoLevel integrate_two_levels(const BaseDomain& base, const QuadratureConfig& quad,
                              const std::function<double(Complex)>& f) {
  const QuadratureConfig fine_cfg = quad.refined();
  fine_cfg.validate(base);
  return {integrate(base, quad, f), integrate(base, fine_cfg, f), fine_cfg.node_count(base)};
}

double relative_change(double coarse, double fine) {
  if (coarse == fine) return 0.0;
  const double scale = std::max(std::abs(coarse), std::abs(fine));
  return std::abs(fine - coarse) / scale;
}

// Moduli on a closed rectangle / disc parametrised by (s, t) in [0,1]^2.
Complex param_point(const BaseDomain& base, double s, double t) {
  if (base.is_rectangle()) {
    const Rectangle& r = base.as_rectangle();
    return {r.x0 + s * (r.x1 - r.x0), r.y0 + t * (r.y1 - r.y0)};
  }
  const Disc& d = base.as_disc();
  const double theta = 2.0 * std::numbers::pi * t;
  return d.center + d.radius * s * Complex(std::cos(theta), std::sin(theta));
}

}  // namespace

NormReport norm_alpha(const AnalyticMap& map, const BaseDomain& base, double alpha, const QuadratureConfig& quad) {
  if (!(alpha >= 1.0) || !std::isfinite(alpha)) throw DomainError("norm_alpha: alpha must be finite and >= 1");
  const double half = 0.5 * alpha;
  auto integrand = [&](Complex z) { return std::pow(std::norm(map.derivative(z)), half); };
  const TwoLevel t = integrate_two_levels(base, quad, integrand);
  const double change = relative_change(t.coarse, t.fine);
  if (change > kDivergenceThreshold) {
    throw QuadratureDivergence("norm_alpha: refinements differ by more than 50% (likely not alpha-regular)");
  }
  NormReport rep;
  rep.alpha = alpha;
  rep.value = std::pow(t.fine, 1.0 / alpha);
  rep.estimated_rel_error = relative_change(std::pow(t.coarse, 1.0 / alpha), rep.value);
  rep.node_count = t.nodes;
  return rep;
}

double norm_sup_sampled(const AnalyticMap& map, const BaseDomain& base) {
  constexpr int kGrid = 512;
  constexpr int kSteps = 20;
  auto modulus = [&](double s, double t) { return std::abs(map.derivative(param_point(base, s, t))); };

  double best = -1.0;
  double bs = 0.0, bt = 0.0;
  for (int j = 0; j < kGrid; ++j) {
    // Disc angle is periodic, so the last row would repeat the first.
    const double t = base.is_rectangle() ? static_cast<double>(j) / (kGrid - 1) : static_cast<double>(j) / kGrid;
    for (int i = 0; i < kGrid; ++i) {
      const double s = static_cast<double>(i) / (kGrid - 1);
      const double m = modulus(s, t);
      if (m > best) {
        best = m;
        bs = s;
        bt = t;
      }
    }
  }
  // Compass pattern search around the best sample.
  double step = 1.0 / (kGrid - 1);
  for (int k = 0; k < kSteps; ++k) {
    bool moved = false;
    const double cand[4][2] = {{bs + step, bt}, {bs - step, bt}, {bs, bt + step}, {bs, bt - step}};
    for (const auto& c : cand) {
      const double s = std::clamp(c[0], 0.0, 1.0);
      const double t = base.is_rectangle() ? std::clamp(c[1], 0.0, 1.0) : c[1];
      const double m = modulus(s, t);
      if (m > best) {
        best = m;
        bs = s;
        bt = t;
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
  }
  return best;
}

double norm_sup(const AnalyticMap& map, const BaseDomain& base) {
  using K = AnalyticMap::Kind;
  const auto& v = map.node().v;
  switch (map.kind()) {
    case K::Identity:
      return 1.0;
    case K::Affine:
      return std::abs(std::get<AnalyticMap::Affine>(v).a);
    case K::Exp:
      if (base.is_rectangle()) return std::exp(base.as_rectangle().x1);
      break;
    case K::Sin:
      if (base.is_rectangle()) {
        const Rectangle& r = base.as_rectangle();
        const double ymax = std::max(std::abs(r.y0), std::abs(r.y1));
        return std::sqrt(0.5 * (1.0 + std::cosh(2.0 * ymax)));
      }
      break;
    default:
      break;
  }
  return norm_sup_sampled(map, base);
}

double norm_l2_dev(const AnalyticMap& map, const QuadratureConfig& quad) {
  const BaseDomain disc = BaseDomain::unit_disc();
  auto integrand = [&](Complex w) { return std::norm(map.derivative(w) - 1.0); };
  const TwoLevel t = integrate_two_levels(disc, quad, integrand);
  const double scale = std::max(t.fine, 1e-300);
  // Both levels may be ~0 (translations); only large relative jumps matter.
  if (t.fine > 1e-28 && std::abs(t.fine - t.coarse) / scale > kDivergenceThreshold) {
    throw QuadratureDivergence("norm_l2_dev: refinements differ by more than 50%");
  }
  return std::sqrt(std::max(t.fine, 0.0));
}

RegularityProfile regularity_profile(const AnalyticMap& map, const BaseDomain& base,
                                     const std::vector<double>& alphas, const QuadratureConfig& quad) {
  RegularityProfile prof;
  for (double a : alphas) {
    if (!(a > 2.0)) throw DomainError("regularity_profile: each alpha must exceed 2");
    try {
      const NormReport rep = norm_alpha(map, base, a, quad);
      const bool finite = std::isfinite(rep.value);
      prof.entries.push_back({a, finite, finite ? std::optional<double>(rep.value) : std::nullopt});
    } catch (const QuadratureDivergence&) {
      prof.entries.push_back({a, false, std::nullopt});
    } catch (const PoleError&) {
      prof.entries.push_back({a, false, std::nullopt});
    }
    if (prof.entries.back().finite) prof.conformal_regular = true;
  }
  return prof;
}

double radius_ratio_norm(const AnalyticMap& map, double alpha, const QuadratureConfig& quad) {
  if (!(alpha >= 1.0) || !std::isfinite(alpha)) throw DomainError("radius_ratio_norm: alpha must be finite and >= 1");
  const BaseDomain disc = BaseDomain::unit_disc();
  auto integrand = [&](Complex w) {
    const double r_base = unit_disc_conformal_radius(w);
    const double r_image = std::abs(map.derivative(w)) * r_base;
    return std::pow(r_image / r_base, alpha);
  };
  const TwoLevel t = integrate_two_levels(disc, quad, integrand);
  if (relative_change(t.coarse, t.fine) > kDivergenceThreshold) {
    throw QuadratureDivergence("radius_ratio_norm: refinements differ by more than 50%");
  }
  return std::pow(t.fine, 1.0 / alpha);
}

}  // namespace confbound
