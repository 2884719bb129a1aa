#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "confbound/analytic_map.hpp"
#include "confbound/errors.hpp"

using namespace confbound;

namespace {

constexpr double kPi = std::numbers::pi;

// Central difference along the real axis; valid for holomorphic maps.
Complex fd_derivative(const AnalyticMap& m, Complex z) {
  const double h = 1e-6;
  return (m(z + h) - m(z - h)) / (2.0 * h);
}

}  // namespace

TEST_CASE("builtin maps evaluate to their defining formulas") {
  CHECK(std::abs(AnalyticMap::identity()(Complex(0.3, -0.2)) - Complex(0.3, -0.2)) == 0.0);
  CHECK(std::abs(AnalyticMap::exp()(Complex(1.0, 0.0)) - std::numbers::e) < 1e-15);
  CHECK(std::abs(AnalyticMap::exp()(Complex(0.0, kPi)) - Complex(-1.0, 0.0)) < 1e-15);
  CHECK(std::abs(AnalyticMap::sin()(Complex(kPi / 2, 0.0)) - 1.0) < 1e-15);
  CHECK(std::abs(AnalyticMap::sin()(Complex(0.0, 1.0)) - Complex(0.0, std::sinh(1.0))) < 1e-15);
  CHECK(std::abs(AnalyticMap::power(3)(Complex(2.0, 0.0)) - 8.0) < 1e-15);
  CHECK(std::abs(AnalyticMap::affine(2.0, Complex(0.0, 1.0))(Complex(1.0, 1.0)) - Complex(2.0, 3.0)) < 1e-15);
  const AnalyticMap inv = AnalyticMap::mobius(0.0, 1.0, 1.0, 0.0);
  CHECK(std::abs(inv(Complex(0.0, 2.0)) - Complex(0.0, -0.5)) < 1e-15);
}

TEST_CASE("complex derivatives agree with finite differences") {
  const std::vector<AnalyticMap> maps = {
      AnalyticMap::identity(),
      AnalyticMap::affine(Complex(1.5, -0.5), 2.0),
      AnalyticMap::exp(),
      AnalyticMap::sin(),
      AnalyticMap::power(4),
      AnalyticMap::mobius(Complex(0.5, 0.0), Complex(0.0, 0.3), Complex(0.2, 0.0), 1.0),
      compose(AnalyticMap::exp(), AnalyticMap::affine(2.0, 1.0)),
      compose(AnalyticMap::sin(), compose(AnalyticMap::power(2), AnalyticMap::affine(0.5, 0.0))),
  };
  const std::vector<Complex> points = {Complex(0.1, 0.2), Complex(-0.4, 0.3), Complex(0.7, -0.6)};
  for (const AnalyticMap& m : maps) {
    for (Complex z : points) {
      const Complex exact = m.derivative(z);
      const Complex approx = fd_derivative(m, z);
      CHECK(std::abs(exact - approx) <= 1e-8 * (1.0 + std::abs(exact)));
      const auto [v, d] = m.value_and_derivative(z);
      CHECK(std::abs(v - m(z)) == 0.0);
      CHECK(std::abs(d - exact) == 0.0);
    }
  }
}

TEST_CASE("composition follows the chain rule") {
  const AnalyticMap inner = AnalyticMap::affine(2.0, 1.0);
  const AnalyticMap m = compose(AnalyticMap::exp(), inner);
  CHECK(m.kind() == AnalyticMap::Kind::Compose);
  const Complex z(0.3, 0.4);
  CHECK(std::abs(m(z) - std::exp(2.0 * z + 1.0)) < 1e-14);
  CHECK(std::abs(m.derivative(z) - 2.0 * std::exp(2.0 * z + 1.0)) < 1e-13);
}

TEST_CASE("invalid parameters and poles raise typed errors") {
  CHECK_THROWS_AS(AnalyticMap::power(0), DomainError);
  CHECK_THROWS_AS(AnalyticMap::affine(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(AnalyticMap::mobius(1.0, 2.0, 2.0, 4.0), DomainError);
  const AnalyticMap inv = AnalyticMap::mobius(0.0, 1.0, 1.0, 0.0);
  CHECK_THROWS_AS(inv(0.0), PoleError);
  CHECK_THROWS_AS(inv.derivative(0.0), PoleError);
  CHECK_THROWS_AS(AnalyticMap::exp()(Complex(1000.0, 0.0)), PoleError);
  CHECK_THROWS_AS(AnalyticMap::exp()(Complex(std::nan(""), 0.0)), DomainError);
}

TEST_CASE("descriptions name the structure") {
  CHECK(AnalyticMap::exp().describe() == "exp(z)");
  CHECK(compose(AnalyticMap::sin(), AnalyticMap::power(2)).describe().find("sin") != std::string::npos);
}
