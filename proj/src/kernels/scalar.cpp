#include "confbound/kernels.hpp"

namespace confbound::kernels {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s[8] = {0, 0, 0, 0, 0, 0, 0, 0};
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    for (std::size_t l = 0; l < 8; ++l) s[l] = s[l] + a[i + l] * b[i + l];
  }
  // Mirrors the lane folding of the vector variant.
  double q[4];
  for (std::size_t l = 0; l < 4; ++l) q[l] = s[l] + s[l + 4];
  double total = (q[0] + q[1]) + (q[2] + q[3]);
  for (; i < n; ++i) total = total + a[i] * b[i];
  return total;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + alpha * x[i];
}

void sub_scaled_scalar(const double* x, double alpha, const double* z, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = x[i] - alpha * z[i];
}

void stencil5_scalar(const double* u, const double* mask, double* y, std::size_t nx, std::size_t ny) {
  if (nx == 0 || ny == 0) return;
  for (std::size_t i = 0; i < nx; ++i) {
    y[i] = 0.0;
    y[(ny - 1) * nx + i] = 0.0;
  }
  for (std::size_t j = 1; j + 1 < ny; ++j) {
    const double* c = u + j * nx;
    const double* s = c - nx;
    const double* nrow = c + nx;
    const double* m = mask + j * nx;
    double* out = y + j * nx;
    out[0] = 0.0;
    out[nx - 1] = 0.0;
    for (std::size_t i = 1; i + 1 < nx; ++i) {
      out[i] = m[i] * (4.0 * c[i] - ((c[i - 1] + c[i + 1]) + (s[i] + nrow[i])));
    }
  }
}

constexpr KernelTable kScalar{Isa::Scalar, dot_scalar, axpy_scalar, sub_scaled_scalar, stencil5_scalar};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

}  // namespace confbound::kernels
