#include "confbound/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "confbound/errors.hpp"

namespace confbound {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// sum_k (-1)^k (x/2)^(2k+n) / (k! (k+n)!)
double bessel_series(int n, double x) {
  const double half = 0.5 * x;
  double term = 1.0;
  for (int k = 1; k <= n; ++k) term *= half / k;
  double sum = term;
  const double q = -half * half;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<double>(k) * (k + n));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("log_gamma: argument must be positive and finite");
  // Shift small arguments up; the Lanczos sum loses relative accuracy near 0.
  double shift = 0.0;
  while (x < 1.5) {
    shift -= std::log(x);
    x += 1.0;
  }
  const double z = x - 1.0;
  double a = kLanczos[0];
  const double t = z + kLanczosG + 0.5;
  for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (z + static_cast<double>(i));
  return shift + 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

double bessel_j0(double x) { return bessel_series(0, x); }

double bessel_j1(double x) { return bessel_series(1, x); }

double bessel_zero(BesselKind kind) {
  // Brackets contain exactly one sign change of the respective function.
  double lo = kind == BesselKind::J0 ? 2.0 : 3.5;
  double hi = kind == BesselKind::J0 ? 3.0 : 4.5;
  auto f = [kind](double x) { return kind == BesselKind::J0 ? bessel_j0(x) : bessel_j1(x); };
  auto df = [kind](double x) { return kind == BesselKind::J0 ? -bessel_j1(x) : bessel_j0(x) - bessel_j1(x) / x; };
  double flo = f(lo);
  for (int i = 0; i < 30; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 8; ++i) {
    const double dx = f(x) / df(x);
    x -= dx;
    if (std::abs(dx) < 1e-15) break;
  }
  return x;
}

}  // namespace confbound
