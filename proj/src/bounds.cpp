#include "confbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "confbound/constants.hpp"
#include "confbound/errors.hpp"
#include "confbound/norms.hpp"

namespace confbound {

namespace {

constexpr double kPi = std::numbers::pi;

double j01_sq() { return j01() * j01(); }

void finalize(BoundResult& r) {
  r.valid = std::isfinite(r.value) &&
            std::all_of(r.preconditions.begin(), r.preconditions.end(),
                        [](const Precondition& p) { return !p.required || p.satisfied; });
  if (r.valid && r.is_lambda1_bound() && !(r.value > 0.0)) r.valid = false;
}

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string method_name(BoundMethod m) {
  switch (m) {
    case BoundMethod::RFK:
      return "RFK";
    case BoundMethod::Makai:
      return "Makai";
    case BoundMethod::Hersch:
      return "Hersch";
    case BoundMethod::TheoremA:
      return "TheoremA";
    case BoundMethod::AlphaRegular:
      return "AlphaRegular";
    case BoundMethod::ConvexKovalev:
      return "ConvexKovalev";
    case BoundMethod::Variation:
      return "Variation";
    case BoundMethod::Gap:
      return "Gap";
    case BoundMethod::GapConvex:
      return "GapConvex";
  }
  return "?";
}

std::string BoundResult::label() const {
  if (method == BoundMethod::AlphaRegular) return "AlphaRegular(" + fmt6(alpha) + ")";
  return method_name(method);
}

bool BoundResult::is_gap_bound() const { return method == BoundMethod::Gap || method == BoundMethod::GapConvex; }

bool BoundResult::is_lambda1_bound() const { return !is_gap_bound() && method != BoundMethod::Variation; }

BoundResult bound_rfk(double image_area) {
  if (!(image_area > 0.0) || !std::isfinite(image_area)) throw DomainError("RFK: area must be positive");
  BoundResult r;
  r.method = BoundMethod::RFK;
  r.value = j01_sq() * kPi / image_area;
  r.preconditions = {{"bounded planar domain of area |Omega|", true}};
  r.intermediates = {{"area", image_area}, {"R_star", std::sqrt(image_area / kPi)}};
  finalize(r);
  return r;
}

BoundResult bound_makai(double rho, bool convex) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("Makai: inradius must be positive");
  BoundResult r;
  r.method = convex ? BoundMethod::Hersch : BoundMethod::Makai;
  const double gamma = convex ? kPi * kPi / 4.0 : 0.25;
  r.value = gamma / (rho * rho);
  r.preconditions = {{"simply connected", true}};
  if (convex) r.preconditions.push_back({"convex (declared)", true});
  r.intermediates = {{"gamma", gamma}, {"rho", rho}};
  finalize(r);
  return r;
}

BoundResult bound_theorem_a(double lambda1_base, double sup_norm) {
  if (!std::isfinite(sup_norm)) throw InfiniteNorm("TheoremA: sup|phi'| is not finite (not infinity-regular)");
  if (!(lambda1_base > 0.0) || !(sup_norm > 0.0)) throw DomainError("TheoremA: arguments must be positive");
  BoundResult r;
  r.method = BoundMethod::TheoremA;
  r.value = lambda1_base / (sup_norm * sup_norm);
  r.preconditions = {{"conformal infinity-regular (sup|phi'| finite)", true}};
  r.intermediates = {{"lambda1_base", lambda1_base}, {"sup_norm", sup_norm}};
  finalize(r);
  return r;
}

BoundResult bound_alpha_regular(double alpha, double base_area, double alpha_norm) {
  if (!(alpha > 2.0) || !std::isfinite(alpha)) throw DomainError("AlphaRegular: requires finite alpha > 2");
  if (!(base_area > 0.0) || !(alpha_norm > 0.0)) throw DomainError("AlphaRegular: arguments must be positive");
  const double r_exp = 2.0 * alpha / (alpha - 2.0);
  const ConstantResult a = poincare_constant_upper(r_exp, base_area);
  BoundResult r;
  r.method = BoundMethod::AlphaRegular;
  r.alpha = alpha;
  r.value = 1.0 / (a.value * a.value * alpha_norm * alpha_norm);
  r.preconditions = {{"conformal alpha-regular (alpha > 2)", std::isfinite(alpha_norm)}};
  r.intermediates = {{"r", r_exp},
                     {"A_r2", a.value},
                     {"p_min", a.minimizer_p},
                     {"p_lo", alpha / (alpha - 1.0)},
                     {"p_hi", 2.0},
                     {"alpha_norm", alpha_norm}};
  finalize(r);
  return r;
}

double kovalev_sup_bound(double ro, double ri, double rc) {
  if (!(ro > 0.0 && ri > 0.0 && rc > 0.0)) throw DomainError("Kovalev: radii must be positive");
  if (!(ri <= ro) || !(rc <= ro)) throw DomainError("Kovalev: requires R_I <= R_O and R_C <= R_O");
  const double quotient =
      std::abs(ri - rc) < 1e-12 * ri ? 1.0 / ri : (std::log(ri) - std::log(rc)) / (ri - rc);
  return rc * std::exp(2.0 * (ro - rc) * quotient);
}

BoundResult bound_convex_kovalev(double ro, double ri, double rc, bool map_fixes_origin) {
  const double s = kovalev_sup_bound(ro, ri, rc);
  const double quotient =
      std::abs(ri - rc) < 1e-12 * ri ? 1.0 / ri : (std::log(ri) - std::log(rc)) / (ri - rc);
  BoundResult r;
  r.method = BoundMethod::ConvexKovalev;
  r.value = j01_sq() / (rc * rc) * std::exp(-4.0 * (ro - rc) * quotient);
  r.preconditions = {{"(R_O R_I R_C) condition (declared convex C^{1-1})", true},
                     {"conformal map of the unit disc fixing 0", map_fixes_origin}};
  r.intermediates = {{"R_O", ro}, {"R_I", ri}, {"R_C", rc}, {"D", quotient}, {"kovalev_sup", s}};
  finalize(r);
  return r;
}

BoundResult bound_variation(double lambda1_base, double sup_norm, bool image_in_base) {
  if (!std::isfinite(sup_norm)) throw InfiniteNorm("Variation: sup|phi'| is not finite");
  if (!(lambda1_base > 0.0) || !(sup_norm > 0.0)) throw DomainError("Variation: arguments must be positive");
  BoundResult r;
  r.method = BoundMethod::Variation;
  const double s2 = sup_norm * sup_norm;
  r.value = (1.0 - s2) / s2 * lambda1_base;
  r.preconditions = {{"conformal infinity-regular (sup|phi'| finite)", true},
                     {"image contained in base (declared)", image_in_base},
                     {"informative (value > 0)", r.value > 0.0, false}};
  r.intermediates = {{"lambda1_base", lambda1_base}, {"sup_norm", sup_norm}};
  finalize(r);
  return r;
}

BoundResult bound_gap(double sup_norm, double l2_dev, double rho, std::optional<double> kovalev_sup,
                      double image_area) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("Gap: inradius must be positive");
  if (!(l2_dev >= 0.0) || !std::isfinite(l2_dev)) throw DomainError("Gap: L2 deviation must be finite and >= 0");
  if (!(std::abs(image_area - kPi) / kPi <= kGapAreaTolerance)) {
    throw AreaMismatch("gap bound requires an image of area pi (got " + fmt6(image_area) + ")");
  }
  const double s = kovalev_sup ? *kovalev_sup : sup_norm;
  if (!std::isfinite(s) || !(s > 0.0)) throw InfiniteNorm("Gap: sup|phi'| must be positive and finite");
  const ConstantResult g = gamma_infinity();
  const double lam_rho = j01_sq() / (rho * rho);
  const double disc_gap = exact_lambda2_disc() - j01_sq();
  BoundResult r;
  r.method = kovalev_sup ? BoundMethod::GapConvex : BoundMethod::Gap;
  r.value = disc_gap - (kLambdaStar * kLambdaStar + 1.0) * lam_rho * lam_rho * g.value * (s + 1.0) * l2_dev;
  r.preconditions = {{"unit-disc base", true},
                     {"image area pi", true},
                     {"conformal infinity-regular (sup|phi'| finite)", true},
                     {"informative (value > 0)", r.value > 0.0, false}};
  if (kovalev_sup) r.preconditions.push_back({"(R_O R_I R_C) condition (declared convex C^{1-1})", true});
  r.intermediates = {{"disc_gap", disc_gap},  {"gamma_inf", g.value}, {"lambda1_D_rho", lam_rho},
                     {"l2_dev", l2_dev},      {"sup_used", s},        {"rho", rho},
                     {"lambda_star", kLambdaStar}};
  if (kovalev_sup) r.intermediates["sup_norm"] = sup_norm;
  finalize(r);
  return r;
}

BoundResult best_bound(std::span<const BoundResult> results) {
  const BoundResult* best = nullptr;
  for (const BoundResult& r : results) {
    if (!r.valid || !r.is_lambda1_bound()) continue;
    if (best == nullptr || r.value > best->value ||
        (r.value == best->value && static_cast<int>(r.method) < static_cast<int>(best->method))) {
      best = &r;
    }
  }
  if (best == nullptr) throw NoValidBound("no valid lambda1 bound");
  return *best;
}

std::vector<BoundResult> lambda1_catalogue(const DomainSpec& spec, const CatalogueOptions& opts) {
  spec.validate();
  std::vector<BoundResult> out;
  const double img_area = image_area(spec, opts.quad);
  out.push_back(bound_rfk(img_area));

  const double rho = inradius(spec, opts.raster_h);
  out.push_back(bound_makai(rho, false));
  if (spec.convex_radii) out.push_back(bound_makai(rho, true));

  const double lam_base = exact_lambda1(spec.base);
  const double sup = norm_sup(spec.map, spec.base);
  out.push_back(bound_theorem_a(lam_base, sup));

  std::optional<BoundResult> best_alpha;
  std::map<std::string, double> sweep;
  const double base_area = area(spec.base);
  for (double a : opts.alphas) {
    try {
      const NormReport n = norm_alpha(spec.map, spec.base, a, opts.quad);
      BoundResult b = bound_alpha_regular(a, base_area, n.value);
      sweep["value@alpha=" + fmt6(a)] = b.value;
      if (!best_alpha || b.value > best_alpha->value) best_alpha = std::move(b);
    } catch (const QuadratureDivergence&) {
      sweep["diverged@alpha=" + fmt6(a)] = 1.0;
    }
  }
  if (best_alpha) {
    best_alpha->intermediates.insert(sweep.begin(), sweep.end());
    out.push_back(*best_alpha);
  }

  if (spec.convex_radii) {
    const ConvexRadii& c = *spec.convex_radii;
    const bool fixes0 = spec.base.is_unit_disc() && std::abs(spec.map(0.0)) < 1e-12;
    out.push_back(bound_convex_kovalev(c.ro, c.ri, c.rc, fixes0));
  }
  if (spec.image_in_base) out.push_back(bound_variation(lam_base, sup, true));
  return out;
}

std::vector<BoundResult> gap_catalogue(const DomainSpec& spec, const CatalogueOptions& opts) {
  spec.validate();
  if (!spec.base.is_unit_disc()) throw DomainError("gap bound requires unit-disc base");
  const double img_area = image_area(spec, opts.quad);
  const double sup = norm_sup(spec.map, spec.base);
  const double l2 = norm_l2_dev(spec.map, opts.quad);
  const double rho = inradius(spec, opts.raster_h);
  std::vector<BoundResult> out;
  out.push_back(bound_gap(sup, l2, rho, std::nullopt, img_area));
  if (spec.convex_radii) {
    const ConvexRadii& c = *spec.convex_radii;
    out.push_back(bound_gap(sup, l2, rho, kovalev_sup_bound(c.ro, c.ri, c.rc), img_area));
  }
  return out;
}

std::string to_csv_row(const BoundResult& r) {
  std::string pre;
  for (const Precondition& p : r.preconditions) {
    if (!pre.empty()) pre += ';';
    pre += p.name + ':' + (p.satisfied ? '1' : '0');
  }
  std::string notes;
  for (const auto& [k, v] : r.intermediates) {
    if (!notes.empty()) notes += ';';
    notes += k + '=' + fmt6(v);
  }
  return r.label() + ',' + fmt6(r.value) + ',' + (r.valid ? "1" : "0") + ',' + pre + ',' + notes;
}

}  // namespace confbound
