#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "confbound/errors.hpp"
#include "confbound/norms.hpp"

using namespace confbound;

namespace {

constexpr double kPi = std::numbers::pi;

BaseDomain exp_base(double d) { return BaseDomain::rectangle(0.0, d, 0.0, kPi); }

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("exp alpha-norms match the closed-form integral") {
  for (double d : {1.0, 0.5}) {
    for (double alpha : {2.0, 3.0, 4.0}) {
      const double oracle = std::pow(kPi * std::expm1(alpha * d) / alpha, 1.0 / alpha);
      const NormReport n = norm_alpha(AnalyticMap::exp(), exp_base(d), alpha, QuadratureConfig{});
      CHECK(rel(n.value, oracle) <= 1e-10);
      CHECK(n.alpha == alpha);
      CHECK(n.estimated_rel_error < 1e-12);
    }
  }
}

TEST_CASE("sin 2-norm matches pi sinh d cosh d") {
  for (double d : {0.125, 0.25, 0.5, 1.0}) {
    const BaseDomain b = BaseDomain::rectangle(-kPi / 2.0, kPi / 2.0, -d, d);
    const double n = norm_alpha(AnalyticMap::sin(), b, 2.0, QuadratureConfig{}).value;
    CHECK(rel(n * n, kPi * std::sinh(d) * std::cosh(d)) <= 1e-10);
  }
}

TEST_CASE("identity and power norms on the unit disc") {
  const BaseDomain disc = BaseDomain::unit_disc();
  for (double alpha : {1.0, 2.0, 5.0}) {
    CHECK(rel(norm_alpha(AnalyticMap::identity(), disc, alpha, QuadratureConfig{}).value,
              std::pow(kPi, 1.0 / alpha)) <= 1e-12);
    // |(z^2)'|^alpha = 2^alpha r^alpha integrates to 2^(alpha+1) pi / (alpha + 2).
    const double oracle = std::pow(std::pow(2.0, alpha + 1.0) * kPi / (alpha + 2.0), 1.0 / alpha);
    CHECK(rel(norm_alpha(AnalyticMap::power(2), disc, alpha, QuadratureConfig{}).value, oracle) <= 1e-10);
  }
}

TEST_CASE("normalized alpha-norms increase with alpha and stay below the sup norm") {
  const std::vector<std::pair<AnalyticMap, BaseDomain>> cases = {
      {AnalyticMap::exp(), exp_base(1.0)},
      {AnalyticMap::sin(), BaseDomain::rectangle(-kPi / 2.0, kPi / 2.0, -0.5, 0.5)},
      {AnalyticMap::mobius(1.0, 0.0, 0.4, 1.0), BaseDomain::unit_disc()},
  };
  for (const auto& [map, base] : cases) {
    const double sup = norm_sup(map, base);
    double prev = 0.0;
    for (double alpha : {1.0, 2.0, 3.0, 4.0, 6.0, 10.0}) {
      const double mean = norm_alpha(map, base, alpha, QuadratureConfig{}).value * std::pow(area(base), -1.0 / alpha);
      CHECK(mean >= prev * (1.0 - 1e-12));
      CHECK(mean <= sup * (1.0 + 1e-12));
      prev = mean;
    }
  }
}

TEST_CASE("closed-form sup norms agree with the sampled search") {
  CHECK(norm_sup(AnalyticMap::exp(), exp_base(1.0)) == doctest::Approx(std::numbers::e).epsilon(1e-15));
  const BaseDomain sb = BaseDomain::rectangle(-kPi / 2.0, kPi / 2.0, -0.5, 0.5);
  CHECK(norm_sup(AnalyticMap::sin(), sb) == doctest::Approx(std::cosh(0.5)).epsilon(1e-15));
  CHECK(norm_sup(AnalyticMap::affine(Complex(0.0, 2.0), 1.0), BaseDomain::unit_disc()) == 2.0);

  CHECK(rel(norm_sup_sampled(AnalyticMap::exp(), exp_base(1.0)), std::numbers::e) <= 1e-9);
  CHECK(rel(norm_sup_sampled(AnalyticMap::sin(), sb), std::cosh(0.5)) <= 1e-9);
  // Mobius z / (1 + 0.4 z): |phi'| = 1 / |1 + 0.4 z|^2, largest at z = -1.
  CHECK(rel(norm_sup(AnalyticMap::mobius(1.0, 0.0, 0.4, 1.0), BaseDomain::unit_disc()), 1.0 / 0.36) <= 1e-6);
}

TEST_CASE("two-point Gauss rule converges at fourth order under panel doubling") {
  const double d = 1.0, alpha = 3.0;
  const double oracle = std::pow(kPi * std::expm1(alpha * d) / alpha, 1.0 / alpha);
  QuadratureConfig q;
  q.nodes_per_axis = 2;
  std::vector<double> errors;
  for (int panels : {2, 4, 8}) {
    q.panels_per_axis = panels;
    // norm_alpha reports the finer of P and 2P; compare P-level integrals directly.
    const double integral = integrate(exp_base(d), q, [&](Complex z) {
      return std::pow(std::abs(AnalyticMap::exp().derivative(z)), alpha);
    });
    errors.push_back(std::abs(std::pow(integral, 1.0 / alpha) - oracle));
  }
  CHECK(errors[0] / errors[1] >= 12.0);
  CHECK(errors[1] / errors[2] >= 12.0);
}

TEST_CASE("radius ratio norm equals the alpha-norm on the disc") {
  const std::vector<AnalyticMap> maps = {AnalyticMap::identity(), AnalyticMap::exp(),
                                         AnalyticMap::mobius(1.0, 0.0, 0.4, 1.0),
                                         compose(AnalyticMap::affine(0.5, 0.1), AnalyticMap::power(2))};
  for (const AnalyticMap& m : maps) {
    for (double alpha : {3.0, 4.0}) {
      const double lhs = radius_ratio_norm(m, alpha, QuadratureConfig{});
      const double rhs = norm_alpha(m, BaseDomain::unit_disc(), alpha, QuadratureConfig{}).value;
      CHECK(rel(lhs, rhs) <= 1e-12);
    }
  }
}

TEST_CASE("L2 deviation from the identity") {
  CHECK(norm_l2_dev(AnalyticMap::identity(), QuadratureConfig{}) == 0.0);
  for (double c : {0.5, 1.5}) {
    CHECK(rel(norm_l2_dev(AnalyticMap::affine(c, 0.3), QuadratureConfig{}), std::abs(c - 1.0) * std::sqrt(kPi)) <=
          1e-12);
  }
  const AnalyticMap m = compose(AnalyticMap::affine(0.25, 0.0), AnalyticMap::power(2));
  const double l2 = norm_l2_dev(m, QuadratureConfig{});
  // m' - 1 = z/2 - 1, whose squared modulus integrates to pi/8 + pi.
  CHECK(rel(l2, std::sqrt(kPi / 8.0 + kPi)) <= 1e-12);
}

TEST_CASE("panel sums are independent of the worker count") {
  QuadratureConfig q1, q3;
  q3.workers = 3;
  for (const BaseDomain& b : {exp_base(1.0), BaseDomain::unit_disc()}) {
    const double a = norm_alpha(AnalyticMap::exp(), b, 3.0, q1).value;
    const double c = norm_alpha(AnalyticMap::exp(), b, 3.0, q3).value;
    CHECK(a == c);
  }
}

TEST_CASE("regularity profile records divergence instead of throwing") {
  CHECK_THROWS_AS(regularity_profile(AnalyticMap::exp(), exp_base(1.0), {2.0}, QuadratureConfig{}), DomainError);
  const RegularityProfile ok = regularity_profile(AnalyticMap::exp(), exp_base(1.0), {3.0, 10.0}, QuadratureConfig{});
  REQUIRE(ok.entries.size() == 2);
  CHECK(ok.entries[0].finite);
  CHECK(ok.conformal_regular);

  // A pole just outside the disc makes a coarse rule disagree wildly with its refinement.
  QuadratureConfig coarse;
  coarse.nodes_per_axis = 2;
  coarse.panels_per_axis = 1;
  coarse.disc_radial_nodes = 2;
  coarse.disc_angular_nodes = 4;
  const AnalyticMap near_pole = AnalyticMap::mobius(1.0, 0.0, -1.0, 1.001);
  CHECK_THROWS_AS(norm_alpha(near_pole, BaseDomain::unit_disc(), 10.0, coarse), QuadratureDivergence);
  const RegularityProfile bad = regularity_profile(near_pole, BaseDomain::unit_disc(), {10.0}, coarse);
  CHECK_FALSE(bad.entries[0].finite);
  CHECK_FALSE(bad.entries[0].value.has_value());
  CHECK_FALSE(bad.conformal_regular);
}

TEST_CASE("quadrature configuration guards") {
  QuadratureConfig q;
  q.nodes_per_axis = 0;
  CHECK_THROWS_AS(q.validate(BaseDomain::unit_disc()), DomainError);
  q = QuadratureConfig{};
  q.panels_per_axis = 100000;
  CHECK_THROWS_AS(q.validate(BaseDomain::unit_disc()), DomainError);
  CHECK(QuadratureConfig{}.refined().panels_per_axis == 16);
}

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
  for (int n : {1, 2, 5, 16, 32}) {
    const GaussRule& g = gauss_legendre(n);
    REQUIRE(g.nodes.size() == static_cast<std::size_t>(n));
    for (int k = 0; k < 2 * n; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += g.weights[i] * std::pow(g.nodes[i], k);
      const double exact = (k % 2 == 1) ? 0.0 : 2.0 / (k + 1);
      CHECK(std::abs(s - exact) <= 1e-14);
    }
  }
}
