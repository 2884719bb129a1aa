#pragma once

#include <cstddef>
#include <string_view>

namespace confbound::kernels {

// Data-parallel inner loops shared by quadrature and the eigensolver.
//
// Every variant follows the same arithmetic order as the scalar reference
// (eight interleaved partial sums for reductions, no fused multiply-add), so
// SIMD and scalar results are bit-identical on the same inputs.

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  /// sum_i a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  /// y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  /// y[i] = x[i] - alpha * z[i]
  void (*sub_scaled)(const double* x, double alpha, const double* z, double* y, std::size_t n);
  /// Masked 5-point negative Laplacian on an nx-by-ny row-major grid:
  /// y = mask * (4u - ((uW + uE) + (uS + uN))). The outer ring of y is set to
  /// zero; mask must be zero there as well.
  void (*stencil5)(const double* u, const double* mask, double* y, std::size_t nx, std::size_t ny);
};

const KernelTable& scalar_table();
/// nullptr when the AVX2 variant was not compiled in.
const KernelTable* avx2_table();

/// Best variant supported by the running CPU. CONFBOUND_ISA=scalar in the
/// environment forces the scalar reference.
const KernelTable& active();

bool cpu_has_avx2();
std::string_view isa_name(Isa isa);

}  // namespace confbound::kernels
