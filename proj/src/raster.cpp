#include "confbound/raster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "confbound/errors.hpp"
#include "confbound/norms.hpp"

namespace confbound {

namespace {

constexpr double kMaxLatticePoints = 4e8;

template <class Fn>
void for_each_lattice_point(const BaseDomain& base, double spacing, Fn&& fn) {
  if (base.is_rectangle()) {
    const Rectangle& r = base.as_rectangle();
    const long nx = std::max(1L, static_cast<long>(std::ceil((r.x1 - r.x0) / spacing)));
    const long ny = std::max(1L, static_cast<long>(std::ceil((r.y1 - r.y0) / spacing)));
    if (static_cast<double>(nx) * static_cast<double>(ny) > kMaxLatticePoints) {
      throw RasterError("rasterize: base lattice too large; increase h");
    }
    const double dx = (r.x1 - r.x0) / static_cast<double>(nx);
    const double dy = (r.y1 - r.y0) / static_cast<double>(ny);
    for (long j = 0; j < ny; ++j) {
      const double y = r.y0 + (static_cast<double>(j) + 0.5) * dy;
      for (long i = 0; i < nx; ++i) fn(Complex(r.x0 + (static_cast<double>(i) + 0.5) * dx, y));
    }
    return;
  }
  const Disc& d = base.as_disc();
  const long n = std::max(2L, static_cast<long>(std::ceil(2.0 * d.radius / spacing)));
  if (static_cast<double>(n) * static_cast<double>(n) > kMaxLatticePoints) {
    throw RasterError("rasterize: base lattice too large; increase h");
  }
  const double step = 2.0 * d.radius / static_cast<double>(n);
  const double r2 = d.radius * d.radius;
  for (long j = 0; j < n; ++j) {
    const double y = -d.radius + (static_cast<double>(j) + 0.5) * step;
    for (long i = 0; i < n; ++i) {
      const double x = -d.radius + (static_cast<double>(i) + 0.5) * step;
      if (x * x + y * y < r2) fn(d.center + Complex(x, y));
    }
  }
}

// Squared 1-D distance transform (Felzenszwalb & Huttenlocher). Sample
// values must stay small enough that f + q^2 is exact.
void edt_1d(const std::vector<double>& f, std::vector<double>& d, std::vector<int>& v, std::vector<double>& z) {
  const int n = static_cast<int>(f.size());
  auto cross = [&](int q, int p) {
    return ((f[q] + double(q) * q) - (f[p] + double(p) * p)) / (2.0 * (q - p));
  };
  int k = 0;
  v[0] = 0;
  z[0] = -std::numeric_limits<double>::infinity();
  z[1] = std::numeric_limits<double>::infinity();
  for (int q = 1; q < n; ++q) {
    double s = cross(q, v[k]);
    while (s <= z[k]) {
      --k;
      s = cross(q, v[k]);
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = std::numeric_limits<double>::infinity();
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    const double dq = q - v[k];
    d[q] = dq * dq + f[v[k]];
  }
}

}  // namespace

std::size_t RasterGrid::count() const {
  return static_cast<std::size_t>(std::count(inside.begin(), inside.end(), std::uint8_t{1}));
}

double RasterGrid::mask_area() const { return static_cast<double>(count()) * h * h; }

RasterGrid rasterize(const DomainSpec& spec, double h, int samples_per_cell) {
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("rasterize: h must be positive");
  if (samples_per_cell < 1) throw DomainError("rasterize: samples_per_cell must be >= 1");
  spec.validate();
  const AnalyticMap& map = spec.map;
  const double stretch = norm_sup(map, spec.base);
  if (!(stretch > 0.0) || !std::isfinite(stretch)) throw RasterError("rasterize: map derivative not bounded");

  // Coordinates of a harmonic map peak on the boundary, so the boundary image
  // bounds the whole image.
  const std::vector<Complex> boundary = spec.base.boundary_samples(h / (8.0 * stretch));
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  std::vector<Complex> mapped_boundary;
  mapped_boundary.reserve(boundary.size());
  for (Complex z : boundary) {
    const Complex w = map(z);
    mapped_boundary.push_back(w);
    xmin = std::min(xmin, w.real());
    xmax = std::max(xmax, w.real());
    ymin = std::min(ymin, w.imag());
    ymax = std::max(ymax, w.imag());
  }

  RasterGrid g;
  g.h = h;
  g.i0 = static_cast<long>(std::floor(xmin / h)) - 2;
  g.j0 = static_cast<long>(std::floor(ymin / h)) - 2;
  const double nxd = std::ceil(xmax / h) - static_cast<double>(g.i0) + 3.0;
  const double nyd = std::ceil(ymax / h) - static_cast<double>(g.j0) + 3.0;
  if (nxd * nyd > 2e8) throw RasterError("rasterize: grid too large; increase h");
  g.nx = static_cast<int>(nxd);
  g.ny = static_cast<int>(nyd);

  std::vector<std::uint8_t> marked(static_cast<std::size_t>(g.nx) * g.ny, 0);
  auto cell_of = [&](Complex w, int& i, int& j) {
    i = static_cast<int>(std::lround(w.real() / h) - g.i0);
    j = static_cast<int>(std::lround(w.imag() / h) - g.j0);
    return i >= 0 && j >= 0 && i < g.nx && j < g.ny;
  };
  for_each_lattice_point(spec.base, h / (samples_per_cell * stretch), [&](Complex z) {
    int i, j;
    if (cell_of(map(z), i, j)) marked[g.index(i, j)] = 1;
  });

  g.inside.assign(marked.size(), 0);
  for (int j = 1; j + 1 < g.ny; ++j) {
    for (int i = 1; i + 1 < g.nx; ++i) {
      if (marked[g.index(i, j)] && marked[g.index(i - 1, j)] && marked[g.index(i + 1, j)] &&
          marked[g.index(i, j - 1)] && marked[g.index(i, j + 1)]) {
        g.inside[g.index(i, j)] = 1;
      }
    }
  }

  const double reach = 0.5 * h;
  for (Complex w : mapped_boundary) {
    const int ilo = static_cast<int>(std::floor((w.real() - reach) / h) - g.i0);
    const int ihi = static_cast<int>(std::ceil((w.real() + reach) / h) - g.i0);
    const int jlo = static_cast<int>(std::floor((w.imag() - reach) / h) - g.j0);
    const int jhi = static_cast<int>(std::ceil((w.imag() + reach) / h) - g.j0);
    for (int j = std::max(jlo, 0); j <= std::min(jhi, g.ny - 1); ++j) {
      for (int i = std::max(ilo, 0); i <= std::min(ihi, g.nx - 1); ++i) {
        if (std::abs(g.center(i, j) - w) <= reach) g.inside[g.index(i, j)] = 0;
      }
    }
  }

  if (g.count() == 0) throw RasterError("rasterize: image domain is empty at this pitch");
  return g;
}

std::vector<double> distance_to_outside(const RasterGrid& grid) {
  const int nx = grid.nx, ny = grid.ny;
  // Exceeds any squared in-grid distance while keeping f + q^2 exact.
  const double big = 1e12;
  std::vector<double> sq(static_cast<std::size_t>(nx) * ny);
  for (std::size_t k = 0; k < sq.size(); ++k) sq[k] = grid.inside[k] ? big : 0.0;

  const int n = std::max(nx, ny);
  std::vector<double> f(n), d(n), z(n + 1);
  std::vector<int> v(n);
  f.resize(ny);
  d.resize(ny);
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) f[j] = sq[grid.index(i, j)];
    edt_1d(f, d, v, z);
    for (int j = 0; j < ny; ++j) sq[grid.index(i, j)] = d[j];
  }
  f.resize(nx);
  d.resize(nx);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) f[i] = sq[grid.index(i, j)];
    edt_1d(f, d, v, z);
    for (int i = 0; i < nx; ++i) sq[grid.index(i, j)] = d[i];
  }
  for (double& s : sq) s = std::sqrt(s) * grid.h;
  return sq;
}

double raster_inradius(const RasterGrid& grid) {
  const auto dist = distance_to_outside(grid);
  return *std::max_element(dist.begin(), dist.end());
}

}  // namespace confbound
