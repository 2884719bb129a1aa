#pragma once

#include <cmath>
#include <complex>
#include <memory>
#include <string>
#include <utility>
#include <variant>

namespace confbound {

using Complex = std::complex<double>;

/// |cz + d| below this raises PoleError for Mobius nodes.
inline constexpr double kPoleThreshold = 1e-300;

struct MapNode;

/// Holomorphic map phi given as an immutable expression tree over a small
/// closed family of builtin maps. Values and complex derivatives are exact up
/// to round-off; composition uses the chain rule.
///
/// Injectivity on the paired base domain is a caller-declared precondition
/// (exp on rectangles of height < 2 pi, sin on rectangles of width <= pi).
/// Copies share the tree, so values are cheap to pass around and safe to
/// evaluate from several threads.
class AnalyticMap {
 public:
  struct Identity {};
  struct Affine {
    Complex a;
    Complex b;
  };
  struct Exp {};
  struct Sin {};
  struct Power {
    int n;
  };
  struct Mobius {
    Complex a, b, c, d;
  };
  struct Compose;

  enum class Kind { Identity, Affine, Exp, Sin, Power, Mobius, Compose };

  AnalyticMap();  // identity

  static AnalyticMap identity();
  /// az + b, a != 0.
  static AnalyticMap affine(Complex a, Complex b);
  static AnalyticMap exp();
  static AnalyticMap sin();
  /// z^n, n >= 1.
  static AnalyticMap power(int n);
  /// (az + b) / (cz + d); requires ad - bc != 0.
  static AnalyticMap mobius(Complex a, Complex b, Complex c, Complex d);

  Kind kind() const;
  const MapNode& node() const { return *node_; }

  /// phi(z). Throws PoleError at Mobius poles or on non-finite results.
  Complex operator()(Complex z) const;
  /// phi'(z).
  Complex derivative(Complex z) const;
  /// (phi(z), phi'(z)) in one traversal.
  std::pair<Complex, Complex> value_and_derivative(Complex z) const;

  /// Human-readable form, e.g. "exp(2*z + 1)".
  std::string describe() const;

 private:
  std::string describe_at(const std::string& arg) const;
  explicit AnalyticMap(std::shared_ptr<const MapNode> node);
  friend AnalyticMap compose(const AnalyticMap& outer, const AnalyticMap& inner);

  std::shared_ptr<const MapNode> node_;
};

struct AnalyticMap::Compose {
  AnalyticMap outer;
  AnalyticMap inner;
};

struct MapNode {
  std::variant<AnalyticMap::Identity, AnalyticMap::Affine, AnalyticMap::Exp, AnalyticMap::Sin,
               AnalyticMap::Power, AnalyticMap::Mobius, AnalyticMap::Compose>
      v;
};

/// outer o inner.
AnalyticMap compose(const AnalyticMap& outer, const AnalyticMap& inner);

inline Complex eval(const AnalyticMap& map, Complex z) { return map(z); }
inline Complex deriv(const AnalyticMap& map, Complex z) { return map.derivative(z); }

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace confbound
