#include <immintrin.h>

#include "confbound/kernels.hpp"

namespace confbound::kernels {

namespace {

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d lo = _mm256_setzero_pd();
  __m256d hi = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    lo = _mm256_add_pd(lo, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    hi = _mm256_add_pd(hi, _mm256_mul_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4)));
  }
  alignas(32) double q[4];
  _mm256_store_pd(q, _mm256_add_pd(lo, hi));
  double total = (q[0] + q[1]) + (q[2] + q[3]);
  for (; i < n; ++i) total = total + a[i] * b[i];
  return total;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vy = _mm256_add_pd(_mm256_loadu_pd(y + i), _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] = y[i] + alpha * x[i];
}

void sub_scaled_avx2(const double* x, double alpha, const double* z, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_mul_pd(va, _mm256_loadu_pd(z + i)));
    _mm256_storeu_pd(y + i, v);
  }
  for (; i < n; ++i) y[i] = x[i] - alpha * z[i];
}

void stencil5_avx2(const double* u, const double* mask, double* y, std::size_t nx, std::size_t ny) {
  if (nx == 0 || ny == 0) return;
  for (std::size_t i = 0; i < nx; ++i) {
    y[i] = 0.0;
    y[(ny - 1) * nx + i] = 0.0;
  }
  const __m256d four = _mm256_set1_pd(4.0);
  for (std::size_t j = 1; j + 1 < ny; ++j) {
    const double* c = u + j * nx;
    const double* s = c - nx;
    const double* nrow = c + nx;
    const double* m = mask + j * nx;
    double* out = y + j * nx;
    out[0] = 0.0;
    out[nx - 1] = 0.0;
    std::size_t i = 1;
    for (; i + 4 < nx; i += 4) {
      const __m256d horiz = _mm256_add_pd(_mm256_loadu_pd(c + i - 1), _mm256_loadu_pd(c + i + 1));
      const __m256d vert = _mm256_add_pd(_mm256_loadu_pd(s + i), _mm256_loadu_pd(nrow + i));
      const __m256d lap = _mm256_sub_pd(_mm256_mul_pd(four, _mm256_loadu_pd(c + i)), _mm256_add_pd(horiz, vert));
      _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(m + i), lap));
    }
    for (; i + 1 < nx; ++i) {
      out[i] = m[i] * (4.0 * c[i] - ((c[i - 1] + c[i + 1]) + (s[i] + nrow[i])));
    }
  }
}

constexpr KernelTable kAvx2{Isa::Avx2, dot_avx2, axpy_avx2, sub_scaled_avx2, stencil5_avx2};

}  // namespace

const KernelTable* avx2_table_impl() { return &kAvx2; }

}  // namespace confbound::kernels
