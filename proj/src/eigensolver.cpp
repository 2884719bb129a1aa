#include "confbound/eigensolver.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "confbound/errors.hpp"
#include "confbound/kernels.hpp"

namespace confbound {

MaskedLaplacian::MaskedLaplacian(const RasterGrid& grid, int workers)
    : nx_(grid.nx), ny_(grid.ny), workers_(std::max(1, workers)) {
  const std::size_t total = static_cast<std::size_t>(nx_) * ny_;
  mask_.assign(total, 0.0);
  index_.assign(total, -1);
  for (int j = 1; j + 1 < ny_; ++j) {
    for (int i = 1; i + 1 < nx_; ++i) {
      const std::size_t c = grid.index(i, j);
      if (grid.inside[c]) {
        mask_[c] = 1.0;
        index_[c] = static_cast<std::int64_t>(cells_.size());
        cells_.push_back(c);
      }
    }
  }
  grid_in_.assign(total, 0.0);
  grid_out_.assign(total, 0.0);
}

void MaskedLaplacian::apply(const double* x, double* y) const {
  const std::size_t n = cells_.size();
  for (std::size_t k = 0; k < n; ++k) grid_in_[cells_[k]] = x[k];
  const auto& kt = kernels::active();
  const std::size_t nx = static_cast<std::size_t>(nx_);
  // Each band recomputes its own rows only; bands share no output rows.
  auto band = [&](int j_begin, int j_end) {
    // Rows j_begin-1 .. j_end form the kernel's window; rows j_begin .. j_end-1 are written.
    const std::size_t rows = static_cast<std::size_t>(j_end - j_begin + 2);
    std::vector<double> out(rows * nx);
    const std::size_t off = static_cast<std::size_t>(j_begin - 1) * nx;
    kt.stencil5(grid_in_.data() + off, mask_.data() + off, out.data(), nx, rows);
    std::copy(out.begin() + static_cast<std::ptrdiff_t>(nx), out.end() - static_cast<std::ptrdiff_t>(nx),
              grid_out_.begin() + static_cast<std::ptrdiff_t>(off + nx));
  };
  const int interior = ny_ - 2;
  if (workers_ == 1 || interior < 2 * workers_) {
    kt.stencil5(grid_in_.data(), mask_.data(), grid_out_.data(), nx, static_cast<std::size_t>(ny_));
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers_; ++w) {
      const int jb = 1 + interior * w / workers_;
      const int je = 1 + interior * (w + 1) / workers_;
      pool.emplace_back(band, jb, je);
    }
  }
  for (std::size_t k = 0; k < n; ++k) y[k] = grid_out_[cells_[k]];
}

namespace {

using SpMat = Eigen::SparseMatrix<double>;

SpMat assemble(const MaskedLaplacian& op, double sigma) {
  const auto& idx = op.compressed_index();
  const std::size_t nx = static_cast<std::size_t>(op.nx());
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(op.size() * 5);
  for (std::size_t k = 0; k < op.size(); ++k) {
    const std::size_t c = op.cell(k);
    const auto row = static_cast<Eigen::Index>(k);
    t.emplace_back(row, row, 4.0 - sigma);
    for (std::size_t nb : {c - 1, c + 1, c - nx, c + nx}) {
      if (idx[nb] >= 0) t.emplace_back(row, static_cast<Eigen::Index>(idx[nb]), -1.0);
    }
  }
  const auto n = static_cast<Eigen::Index>(op.size());
  SpMat a(n, n);
  a.setFromTriplets(t.begin(), t.end());
  return a;
}

}  // namespace

OracleResult fd_eigenvalues(const RasterGrid& grid, int k, double tol, const FdOptions& opts) {
  if (k < 1) throw DomainError("fd_eigenvalues: k must be >= 1");
  if (!(tol > 0.0)) throw DomainError("fd_eigenvalues: tol must be positive");
  const MaskedLaplacian op(grid, opts.workers);
  const auto n = static_cast<Eigen::Index>(op.size());
  const int block = static_cast<int>(std::min<Eigen::Index>(k + 2, n));
  if (n < k) throw RasterError("fd_eigenvalues: fewer unknowns than requested eigenvalues");

  const double h2 = grid.h * grid.h;
  const double sigma = opts.shift * h2;
  Eigen::SimplicialLDLT<SpMat> solver(assemble(op, sigma));
  if (solver.info() != Eigen::Success) throw ConvergenceError("fd_eigenvalues: factorization failed");

  const auto& kt = kernels::active();
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Eigen::MatrixXd x(n, block);
  for (Eigen::Index c = 0; c < block; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) x(r, c) = uni(rng);
  }
  x = Eigen::HouseholderQR<Eigen::MatrixXd>(x).householderQ() * Eigen::MatrixXd::Identity(n, block);

  Eigen::MatrixXd y(n, block), ay(n, block), ax(n, block);
  Eigen::VectorXd r(n);
  OracleResult out;
  out.h = grid.h;
  out.unknowns = op.size();
  const long cap = opts.max_applications_per_pair * k;
  long applications = 0;
  Eigen::VectorXd theta;
  std::vector<double> res(static_cast<std::size_t>(k));

  while (true) {
    y = solver.solve(x);
    for (Eigen::Index c = 0; c < block; ++c) op.apply(y.col(c).data(), ay.col(c).data());
    applications += 2L * block;
    ++out.iterations;

    Eigen::MatrixXd gram(block, block), proj(block, block);
    for (Eigen::Index a = 0; a < block; ++a) {
      for (Eigen::Index b = a; b < block; ++b) {
        gram(a, b) = gram(b, a) = kt.dot(y.col(a).data(), y.col(b).data(), static_cast<std::size_t>(n));
        const double hab = 0.5 * (kt.dot(y.col(a).data(), ay.col(b).data(), static_cast<std::size_t>(n)) +
                                  kt.dot(y.col(b).data(), ay.col(a).data(), static_cast<std::size_t>(n)));
        proj(a, b) = proj(b, a) = hab;
      }
    }
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ritz(proj, gram);
    if (ritz.info() != Eigen::Success) throw ConvergenceError("fd_eigenvalues: Rayleigh-Ritz step failed");
    theta = ritz.eigenvalues();
    x = y * ritz.eigenvectors();
    ax = ay * ritz.eigenvectors();

    double worst = 0.0;
    for (int i = 0; i < k; ++i) {
      const double nrm = std::sqrt(kt.dot(x.col(i).data(), x.col(i).data(), static_cast<std::size_t>(n)));
      kt.sub_scaled(ax.col(i).data(), theta(i), x.col(i).data(), r.data(), static_cast<std::size_t>(n));
      const double rn = std::sqrt(kt.dot(r.data(), r.data(), static_cast<std::size_t>(n)));
      res[static_cast<std::size_t>(i)] = rn / (nrm * std::abs(theta(i)));
      worst = std::max(worst, res[static_cast<std::size_t>(i)]);
    }
    if (worst <= tol) {
      out.residual = worst;
      break;
    }
    if (applications >= cap) {
      throw ConvergenceError("fd_eigenvalues: no convergence within the matrix-application cap");
    }
    for (Eigen::Index c = 0; c < block; ++c) x.col(c).normalize();
  }

  for (int i = 0; i < k; ++i) out.eigenvalues.push_back(theta(i) / h2);
  out.residuals = res;
  return out;
}

}  // namespace confbound
