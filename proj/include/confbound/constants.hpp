#pragma once

#include <functional>

namespace confbound {

/// Result of an infimum over an open interval of exponents p.
struct ConstantResult {
  double value = 0.0;
  double minimizer_p = 0.0;
  double p_lo = 0.0;  // open interval (p_lo, p_hi)
  double p_hi = 0.0;
  int iterations = 0;
};

/// Clamp margin applied to both ends of the open p-interval.
inline constexpr double kIntervalMargin = 1e-9;
/// Final golden-section bracket width.
inline constexpr double kGoldenTolerance = 1e-12;

/// Sobolev-type constant lambda_* of the spectral gap estimate, at its
/// published precision.
inline constexpr double kLambdaStar = 2.539;

struct GoldenResult {
  double x;
  double fx;
  int iterations;
};

/// Golden-section search for the minimum of f on [a, b] down to bracket
/// width `tol`. Converges to an endpoint when f is monotone there.
GoldenResult golden_section_minimize(const std::function<double(double)>& f, double a, double b, double tol);

/// log of ((p-1)/(2-p))^((p-1)/p) |area|^(1/r) / (sqrt(pi) 2^(1/p) sqrt(Gamma(2/p) Gamma(3-2/p))).
double log_poincare_objective(double p, double r, double area);

/// log of ((p-1)/(2-p))^(2(p-1)/p) pi^(-1/2) 4^(-1/p) / (Gamma(2/p) Gamma(3-2/p)).
double log_gamma_infinity_objective(double p);

/// Upper estimate of the Poincare-Sobolev constant A_{r,2} of a domain with
/// the given area: infimum of the objective over p in (2r/(r+2), 2).
/// Throws DomainError for r < 2 or area <= 0.
ConstantResult poincare_constant_upper(double r, double area);

/// Gap constant: infimum of its objective over p in (4/3, 2).
ConstantResult gamma_infinity();

/// j_{0,1}, cached.
double j01();
/// j_{1,1}, cached.
double j11();

}  // namespace confbound
