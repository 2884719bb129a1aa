#include "confbound/constants.hpp"

#include <cmath>
#include <numbers>

#include "confbound/errors.hpp"
#include "confbound/special_functions.hpp"

namespace confbound {

namespace {
constexpr double kInvPhi = 0.6180339887498949;  // (sqrt 5 - 1) / 2
}

GoldenResult golden_section_minimize(const std::function<double(double)>& f, double a, double b, double tol) {
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int it = 0;
  while (b - a > tol && it < 500) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
    ++it;
  }
  const double x = 0.5 * (a + b);
  return {x, f(x), it};
}

double log_poincare_objective(double p, double r, double area) {
  return (p - 1.0) / p * (std::log(p - 1.0) - std::log(2.0 - p)) + std::log(area) / r -
         0.5 * std::log(std::numbers::pi) - std::log(2.0) / p -
         0.5 * (log_gamma(2.0 / p) + log_gamma(3.0 - 2.0 / p));
}

double log_gamma_infinity_objective(double p) {
  return 2.0 * (p - 1.0) / p * (std::log(p - 1.0) - std::log(2.0 - p)) - 0.5 * std::log(std::numbers::pi) -
         std::log(4.0) / p - (log_gamma(2.0 / p) + log_gamma(3.0 - 2.0 / p));
}

ConstantResult poincare_constant_upper(double r, double area) {
  if (!(r >= 2.0) || !std::isfinite(r)) throw DomainError("poincare_constant_upper: requires r >= 2");
  if (!(area > 0.0) || !std::isfinite(area)) throw DomainError("poincare_constant_upper: area must be positive");
  const double lo = 2.0 * r / (r + 2.0);
  const double hi = 2.0;
  const auto g = golden_section_minimize([&](double p) { return log_poincare_objective(p, r, area); },
                                         lo + kIntervalMargin, hi - kIntervalMargin, kGoldenTolerance);
  return {std::exp(g.fx), g.x, lo, hi, g.iterations};
}

ConstantResult gamma_infinity() {
  const double lo = 4.0 / 3.0;
  const double hi = 2.0;
  const auto g = golden_section_minimize(log_gamma_infinity_objective, lo + kIntervalMargin, hi - kIntervalMargin,
                                         kGoldenTolerance);
  return {std::exp(g.fx), g.x, lo, hi, g.iterations};
}

double j01() {
  static const double v = bessel_zero(BesselKind::J0);
  return v;
}

double j11() {
  static const double v = bessel_zero(BesselKind::J1);
  return v;
}

}  // namespace confbound
