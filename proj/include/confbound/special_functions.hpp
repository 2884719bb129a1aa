#pragma once

namespace confbound {

/// ln Gamma(x) for x > 0 (Lanczos, g = 7), relative error below 1e-13.
/// Throws DomainError for x <= 0.
double log_gamma(double x);

/// Bessel functions of the first kind by their power series; accurate for
/// the moderate arguments (|x| < 10) used to locate the first zeros.
double bessel_j0(double x);
double bessel_j1(double x);

enum class BesselKind { J0, J1 };

/// First positive zero of J0 or J1, absolute error <= 1e-12.
double bessel_zero(BesselKind kind);

}  // namespace confbound
