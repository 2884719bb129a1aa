#include "confbound/analytic_map.hpp"

#include <sstream>

#include "confbound/errors.hpp"

namespace confbound {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Complex checked(Complex w, const char* what) {
  if (!is_finite(w)) {
    throw PoleError(std::string("non-finite value from ") + what);
  }
  return w;
}

std::string fmt_complex(Complex c) {
  std::ostringstream os;
  os.precision(6);
  if (c.imag() == 0.0) {
    os << c.real();
  } else {
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
  }
  return os.str();
}

}  // namespace

AnalyticMap::AnalyticMap() : node_(std::make_shared<const MapNode>(MapNode{Identity{}})) {}

AnalyticMap::AnalyticMap(std::shared_ptr<const MapNode> node) : node_(std::move(node)) {}

AnalyticMap AnalyticMap::identity() { return AnalyticMap(); }

AnalyticMap AnalyticMap::affine(Complex a, Complex b) {
  if (!is_finite(a) || !is_finite(b)) throw DomainError("affine coefficients must be finite");
  if (a == Complex(0.0)) throw DomainError("affine map needs a != 0 to be conformal");
  return AnalyticMap(std::make_shared<const MapNode>(MapNode{Affine{a, b}}));
}

AnalyticMap AnalyticMap::exp() { return AnalyticMap(std::make_shared<const MapNode>(MapNode{Exp{}})); }

AnalyticMap AnalyticMap::sin() { return AnalyticMap(std::make_shared<const MapNode>(MapNode{Sin{}})); }

AnalyticMap AnalyticMap::power(int n) {
  if (n < 1) throw DomainError("power exponent must be >= 1");
  return AnalyticMap(std::make_shared<const MapNode>(MapNode{Power{n}}));
}

AnalyticMap AnalyticMap::mobius(Complex a, Complex b, Complex c, Complex d) {
  if (!is_finite(a) || !is_finite(b) || !is_finite(c) || !is_finite(d)) {
    throw DomainError("mobius coefficients must be finite");
  }
  if (a * d - b * c == Complex(0.0)) throw DomainError("mobius determinant ad - bc vanishes");
  return AnalyticMap(std::make_shared<const MapNode>(MapNode{Mobius{a, b, c, d}}));
}

AnalyticMap compose(const AnalyticMap& outer, const AnalyticMap& inner) {
  return AnalyticMap(std::make_shared<const MapNode>(MapNode{AnalyticMap::Compose{outer, inner}}));
}

AnalyticMap::Kind AnalyticMap::kind() const { return static_cast<Kind>(node_->v.index()); }

std::pair<Complex, Complex> AnalyticMap::value_and_derivative(Complex z) const {
  if (!is_finite(z)) throw DomainError("map argument must be finite");
  return std::visit(
      overloaded{
          [&](const Identity&) { return std::pair{z, Complex(1.0)}; },
          [&](const Affine& m) { return std::pair{m.a * z + m.b, m.a}; },
          [&](const Exp&) {
            const Complex w = checked(std::exp(z), "exp");
            return std::pair{w, w};
          },
          [&](const Sin&) {
            return std::pair{checked(std::sin(z), "sin"), checked(std::cos(z), "sin'")};
          },
          [&](const Power& m) {
            Complex pw(1.0);  // z^(n-1)
            for (int i = 1; i < m.n; ++i) pw *= z;
            return std::pair{checked(pw * z, "power"), checked(double(m.n) * pw, "power'")};
          },
          [&](const Mobius& m) {
            const Complex den = m.c * z + m.d;
            if (std::abs(den) < kPoleThreshold) throw PoleError("mobius pole: |cz + d| vanishes");
            const Complex w = checked((m.a * z + m.b) / den, "mobius");
            const Complex dw = checked((m.a * m.d - m.b * m.c) / (den * den), "mobius'");
            return std::pair{w, dw};
          },
          [&](const Compose& m) {
            const auto [gi, dgi] = m.inner.value_and_derivative(z);
            const auto [fo, dfo] = m.outer.value_and_derivative(gi);
            return std::pair{fo, checked(dfo * dgi, "chain rule")};
          },
      },
      node_->v);
}

Complex AnalyticMap::operator()(Complex z) const { return value_and_derivative(z).first; }

Complex AnalyticMap::derivative(Complex z) const { return value_and_derivative(z).second; }

std::string AnalyticMap::describe() const {
  return describe_at("z");
}

std::string AnalyticMap::describe_at(const std::string& arg) const {
  return std::visit(
      overloaded{
          [&](const Identity&) { return arg; },
          [&](const Affine& m) { return fmt_complex(m.a) + "*" + arg + " + " + fmt_complex(m.b); },
          [&](const Exp&) { return "exp(" + arg + ")"; },
          [&](const Sin&) { return "sin(" + arg + ")"; },
          [&](const Power& m) { return "(" + arg + ")^" + std::to_string(m.n); },
          [&](const Mobius& m) {
            return "(" + fmt_complex(m.a) + "*" + arg + " + " + fmt_complex(m.b) + ")/(" +
                   fmt_complex(m.c) + "*" + arg + " + " + fmt_complex(m.d) + ")";
          },
          [&](const Compose& m) { return m.outer.describe_at(m.inner.describe_at(arg)); },
      },
      node_->v);
}

}  // namespace confbound
