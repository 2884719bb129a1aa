#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "confbound/bounds.hpp"
#include "confbound/constants.hpp"
#include "confbound/eigensolver.hpp"
#include "confbound/errors.hpp"
#include "confbound/oracle.hpp"
#include "confbound/raster.hpp"

using namespace confbound;

namespace {

constexpr double kPi = std::numbers::pi;

DomainSpec unit_square() {
  DomainSpec s;
  s.base = BaseDomain::rectangle(0.0, 1.0, 0.0, 1.0);
  return s;
}

DomainSpec disc(double radius) {
  DomainSpec s;
  s.base = BaseDomain::disc(0.0, radius);
  return s;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Discrete Dirichlet eigenvalue (m, n) of the 5-point Laplacian on the unit
// square with pitch h.
double square_discrete(double h, int m, int n) {
  return (4.0 - 2.0 * std::cos(m * kPi * h) - 2.0 * std::cos(n * kPi * h)) / (h * h);
}

}  // namespace

TEST_CASE("unit square raster has the standard interior nodes") {
  const RasterGrid g = rasterize(unit_square(), 1.0 / 128.0);
  CHECK(g.count() == 127u * 127u);
  CHECK(rel(g.mask_area(), 127.0 * 127.0 / (128.0 * 128.0)) <= 1e-15);
}

TEST_CASE("raster areas converge to the image area") {
  const RasterGrid d = rasterize(disc(1.0), 1.0 / 128.0);
  CHECK(rel(d.mask_area(), kPi) <= 0.02);
  DomainSpec half_annulus;
  half_annulus.base = BaseDomain::rectangle(0.0, 1.0, 0.0, kPi);
  half_annulus.map = AnalyticMap::exp();
  const RasterGrid a = rasterize(half_annulus, 1.0 / 128.0);
  CHECK(rel(a.mask_area(), kPi * std::expm1(2.0) / 2.0) <= 0.03);
}

TEST_CASE("empty rasters are rejected") {
  DomainSpec tiny;
  tiny.base = BaseDomain::disc(0.0, 1e-3);
  CHECK_THROWS_AS(rasterize(tiny, 0.1), RasterError);
}

TEST_CASE("square eigenvalues match the discrete closed form") {
  const double h = 1.0 / 128.0;
  const OracleResult r = fd_eigenvalues(rasterize(unit_square(), h), 3, 1e-10);
  REQUIRE(r.eigenvalues.size() == 3);
  CHECK(rel(r.eigenvalues[0], square_discrete(h, 1, 1)) <= 1e-8);
  CHECK(rel(r.eigenvalues[1], square_discrete(h, 1, 2)) <= 1e-8);
  CHECK(rel(r.eigenvalues[2], square_discrete(h, 2, 1)) <= 1e-8);
  CHECK(r.residual <= 1e-10);
  CHECK(r.unknowns == 127u * 127u);
}

TEST_CASE("Richardson extrapolation recovers 2 pi^2 on the square") {
  const double c = fd_eigenvalues(rasterize(unit_square(), 1.0 / 64.0), 1).eigenvalues[0];
  const double f = fd_eigenvalues(rasterize(unit_square(), 1.0 / 128.0), 1).eigenvalues[0];
  CHECK(rel(richardson(c, f), 2.0 * kPi * kPi) <= 1e-3);
  CHECK(std::abs(richardson(c, f) - 2.0 * kPi * kPi) < std::abs(f - 2.0 * kPi * kPi));
}

TEST_CASE("square error shrinks by at least 3x per halving of h") {
  double prev = 0.0;
  for (double h : {1.0 / 16.0, 1.0 / 32.0, 1.0 / 64.0}) {
    const double err = std::abs(fd_eigenvalues(rasterize(unit_square(), h), 1).eigenvalues[0] - 2.0 * kPi * kPi);
    if (prev > 0.0) CHECK(prev / err >= 3.0);
    prev = err;
  }
}

TEST_CASE("unit disc eigenvalues approach the Bessel values") {
  const OracleResult r = fd_eigenvalues(rasterize(disc(1.0), 1.0 / 128.0), 2);
  CHECK(rel(r.eigenvalues[0], j01() * j01()) <= 0.01);
  CHECK(rel(r.eigenvalues[1], j11() * j11()) <= 0.02);
}

TEST_CASE("domain monotonicity") {
  const double h = 1.0 / 64.0;
  const double big = fd_eigenvalues(rasterize(disc(1.0), h), 1).eigenvalues[0];
  const double small = fd_eigenvalues(rasterize(disc(0.9), h), 1).eigenvalues[0];
  CHECK(small > big);
}

TEST_CASE("eigenvalues do not depend on the worker count") {
  const RasterGrid g = rasterize(disc(1.0), 1.0 / 64.0);
  FdOptions one, three;
  three.workers = 3;
  const OracleResult a = fd_eigenvalues(g, 2, 1e-8, one);
  const OracleResult b = fd_eigenvalues(g, 2, 1e-8, three);
  CHECK(a.eigenvalues == b.eigenvalues);
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("masked Laplacian matches a direct stencil") {
  const RasterGrid g = rasterize(disc(1.0), 1.0 / 16.0);
  const MaskedLaplacian a(g);
  std::vector<double> x(a.size()), y(a.size());
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = std::sin(0.37 * static_cast<double>(k));
  a.apply(x.data(), y.data());
  const auto& idx = a.compressed_index();
  for (std::size_t k = 0; k < a.size(); ++k) {
    const std::size_t c = a.cell(k);
    const auto at = [&](std::size_t cell) { return idx[cell] < 0 ? 0.0 : x[static_cast<std::size_t>(idx[cell])]; };
    const std::size_t nx = static_cast<std::size_t>(g.nx);
    const double ref = 4.0 * x[k] - ((at(c - 1) + at(c + 1)) + (at(c - nx) + at(c + nx)));
    CHECK(y[k] == ref);
  }
}

TEST_CASE("solver reports non-convergence under a tiny budget") {
  FdOptions o;
  o.max_applications_per_pair = 2;
  CHECK_THROWS_AS(fd_eigenvalues(rasterize(disc(1.0), 1.0 / 32.0), 1, 1e-12, o), ConvergenceError);
}

TEST_CASE("validate accepts true bounds and rejects a corrupted one") {
  DomainSpec s = disc(1.0);
  std::vector<BoundResult> bounds = lambda1_catalogue(s, CatalogueOptions{});
  const auto gaps = gap_catalogue(s, CatalogueOptions{});
  bounds.insert(bounds.end(), gaps.begin(), gaps.end());
  const ValidationReport ok = validate(s, bounds, 1.0 / 64.0);
  CHECK(ok.all_pass);
  CHECK(ok.lambda2.has_value());
  CHECK(rel(ok.lambda1, j01() * j01()) <= 2e-3);
  for (const BoundCheck& c : ok.checks) {
    CHECK(c.checked);
    CHECK(c.tightness <= 1.0 + ok.eps_grid);
  }

  BoundResult bogus = bound_rfk(kPi);
  bogus.value = 1e6;
  bounds.push_back(bogus);
  const ValidationReport bad = validate(s, bounds, 1.0 / 64.0);
  CHECK_FALSE(bad.all_pass);
  CHECK_FALSE(bad.checks.back().pass);
}

TEST_CASE("Dirichlet energy is conformally invariant") {
  DomainSpec exp_spec;
  exp_spec.base = BaseDomain::rectangle(0.0, 1.0, 0.0, kPi);
  exp_spec.map = AnalyticMap::exp();
  const QuadratureConfig q = energy_check_quadrature();
  CHECK(energy_isometry_check(AnalyticMap::identity(), BaseDomain::unit_disc(), q) <= 1e-6);
  CHECK(energy_isometry_check(AnalyticMap::affine(2.0, 0.0), BaseDomain::unit_disc(), q) <= 1e-6);
  CHECK(energy_isometry_check(exp_spec.map, exp_spec.base, q) <= 1e-6);
  CHECK(energy_isometry_check(AnalyticMap::sin(), BaseDomain::rectangle(-kPi / 2.0, kPi / 2.0, -0.5, 0.5), q) <=
        1e-6);

  // Explicit disc away from the centroid image.
  const BumpDisc off{Complex(0.2, 0.1), 0.5};
  CHECK(energy_isometry_check(AnalyticMap::identity(), BaseDomain::unit_disc(), q, off) <= 1e-6);
  const BumpDisc d = inscribed_bump_disc(exp_spec.map, exp_spec.base);
  CHECK(d.radius > 0.0);
  CHECK(d.radius < std::expm1(1.0) / 2.0);
}
