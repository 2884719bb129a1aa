#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "confbound/raster.hpp"

namespace confbound {

/// Discrete Dirichlet eigenvalues of a raster, ascending, in 1/length^2.
struct OracleResult {
  std::vector<double> eigenvalues;
  std::vector<double> residuals;  // per eigenpair, ||Au - lambda u|| / lambda
  double h = 0.0;
  int iterations = 0;
  double residual = 0.0;  // max of residuals
  std::size_t unknowns = 0;
};

/// 5-point negative Laplacian restricted to the inside cells of a raster, with
/// zero values outside (unscaled: 4 on the diagonal, -1 per neighbour).
/// apply() runs the active SIMD stencil kernel over row bands.
class MaskedLaplacian {
 public:
  explicit MaskedLaplacian(const RasterGrid& grid, int workers = 1);

  std::size_t size() const { return cells_.size(); }
  /// y = A x on compressed (inside-only) vectors.
  void apply(const double* x, double* y) const;
  /// Grid cell index of compressed unknown k.
  std::size_t cell(std::size_t k) const { return cells_[k]; }
  /// Compressed index of each cell, -1 outside.
  const std::vector<std::int64_t>& compressed_index() const { return index_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }

 private:
  int nx_, ny_;
  int workers_;
  std::vector<double> mask_;
  std::vector<std::size_t> cells_;
  std::vector<std::int64_t> index_;
  mutable std::vector<double> grid_in_;
  mutable std::vector<double> grid_out_;
};

struct FdOptions {
  /// Spectral shift (1/length^2) for shift-and-invert; must lie below lambda1.
  double shift = 0.0;
  /// Matrix applications (solves + products) allowed per requested eigenpair.
  long max_applications_per_pair = 100'000;
  int workers = 1;
};

/// Smallest k eigenvalues of the raster's 5-point Laplacian, scaled by 1/h^2,
/// by block shift-and-invert subspace iteration (sparse LDL^T) with
/// Rayleigh-Ritz, to relative residual <= tol. Throws ConvergenceError after
/// the application cap.
OracleResult fd_eigenvalues(const RasterGrid& grid, int k, double tol = 1e-8, const FdOptions& opts = {});

}  // namespace confbound
