#include "confbound/quadrature.hpp"

#include <cmath>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <thread>

#include "confbound/errors.hpp"
#include "confbound/kernels.hpp"

namespace confbound {

void QuadratureConfig::validate(const BaseDomain& base) const {
  if (nodes_per_axis < 2) throw DomainError("quadrature: nodes_per_axis must be >= 2");
  if (panels_per_axis < 1) throw DomainError("quadrature: panels_per_axis must be >= 1");
  if (disc_radial_nodes < 2) throw DomainError("quadrature: disc_radial_nodes must be >= 2");
  if (disc_angular_nodes < 4) throw DomainError("quadrature: disc_angular_nodes must be >= 4");
  if (workers < 1) throw DomainError("quadrature: workers must be >= 1");
  if (node_count(base) > kMaxNodes) throw DomainError("quadrature: node count exceeds 1e8 guard");
}

std::size_t QuadratureConfig::node_count(const BaseDomain& base) const {
  const auto p = static_cast<std::size_t>(std::max(panels_per_axis, 0));
  if (base.is_rectangle()) {
    const auto n = static_cast<std::size_t>(std::max(nodes_per_axis, 0));
    return p * p * n * n;
  }
  return p * p * static_cast<std::size_t>(std::max(disc_radial_nodes, 0)) *
         static_cast<std::size_t>(std::max(disc_angular_nodes, 0));
}

QuadratureConfig QuadratureConfig::refined() const {
  QuadratureConfig q = *this;
  q.panels_per_axis *= 2;
  return q;
}

const GaussRule& gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: n must be >= 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (slot) return *slot;

  auto rule = std::make_unique<GaussRule>();
  rule->nodes.resize(n);
  rule->weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule->nodes[n - 1 - i] = x;
    rule->nodes[i] = -x;
    rule->weights[i] = w;
    rule->weights[n - 1 - i] = w;
  }
  slot = std::move(rule);
  return *slot;
}

double pairwise_sum(std::span<const double> values) {
  if (values.empty()) return 0.0;
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t mid = values.size() / 2;
  return pairwise_sum(values.first(mid)) + pairwise_sum(values.subspan(mid));
}

namespace {

struct PanelBuffers {
  std::vector<Complex> points;
  std::vector<double> weights;
  std::vector<double> values;
};

// Fills the nodes of panel `index` for the given base/config.
void panel_nodes(const BaseDomain& base, const QuadratureConfig& q, int index, PanelBuffers& buf) {
  buf.points.clear();
  buf.weights.clear();
  const int p = q.panels_per_axis;
  const int pi = index % p;
  const int pj = index / p;
  if (base.is_rectangle()) {
    const Rectangle& r = base.as_rectangle();
    const GaussRule& g = gauss_legendre(q.nodes_per_axis);
    const double hx = (r.x1 - r.x0) / p;
    const double hy = (r.y1 - r.y0) / p;
    const double ax = r.x0 + pi * hx;
    const double ay = r.y0 + pj * hy;
    for (int j = 0; j < q.nodes_per_axis; ++j) {
      const double y = ay + 0.5 * hy * (g.nodes[j] + 1.0);
      for (int i = 0; i < q.nodes_per_axis; ++i) {
        const double x = ax + 0.5 * hx * (g.nodes[i] + 1.0);
        buf.points.emplace_back(x, y);
        buf.weights.push_back(0.25 * hx * hy * g.weights[i] * g.weights[j]);
      }
    }
    return;
  }
  // Disc: pi indexes the radial panel, pj the angular sector.
  const Disc& d = base.as_disc();
  const GaussRule& g = gauss_legendre(q.disc_radial_nodes);
  const double hr = d.radius / p;
  const double a0 = pi * hr;
  const int nang = q.disc_angular_nodes;
  const double dtheta = 2.0 * std::numbers::pi / (static_cast<double>(nang) * p);
  for (int k = 0; k < nang; ++k) {
    const double theta = dtheta * (static_cast<double>(pj) * nang + k + 0.5);
    const Complex dir(std::cos(theta), std::sin(theta));
    for (int i = 0; i < q.disc_radial_nodes; ++i) {
      const double r = a0 + 0.5 * hr * (g.nodes[i] + 1.0);
      buf.points.push_back(d.center + r * dir);
      buf.weights.push_back(0.5 * hr * g.weights[i] * r * dtheta);
    }
  }
}

}  // namespace

double integrate(const BaseDomain& base, const QuadratureConfig& quad,
                 const std::function<double(Complex)>& f) {
  quad.validate(base);
  const int panels = quad.panels_per_axis * quad.panels_per_axis;
  std::vector<double> sums(static_cast<std::size_t>(panels), 0.0);
  const auto& kt = kernels::active();

  auto run = [&](int worker, int stride, std::exception_ptr& err) {
    PanelBuffers buf;
    try {
      for (int idx = worker; idx < panels; idx += stride) {
        panel_nodes(base, quad, idx, buf);
        buf.values.resize(buf.points.size());
        for (std::size_t k = 0; k < buf.points.size(); ++k) buf.values[k] = f(buf.points[k]);
        sums[static_cast<std::size_t>(idx)] = kt.dot(buf.weights.data(), buf.values.data(), buf.values.size());
      }
    } catch (...) {
      err = std::current_exception();
    }
  };

  const int nw = std::min(quad.workers, panels);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(nw));
  if (nw == 1) {
    run(0, 1, errors[0]);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < nw; ++w) pool.emplace_back([&, w] { run(w, nw, errors[static_cast<std::size_t>(w)]); });
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return pairwise_sum(sums);
}

}  // namespace confbound
