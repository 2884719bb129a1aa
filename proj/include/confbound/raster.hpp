#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "confbound/analytic_map.hpp"
#include "confbound/geometry.hpp"

namespace confbound {

/// Cell-centred raster of an image domain. Cell (i, j) is the square of side
/// h centred on ((i0 + i) h, (j0 + j) h); `inside` marks cells whose centre
/// is an unknown of the discrete Dirichlet problem. The outer two rings are
/// always outside.
struct RasterGrid {
  double h = 0.0;
  long i0 = 0;
  long j0 = 0;
  int nx = 0;
  int ny = 0;
  std::vector<std::uint8_t> inside;  // row-major, nx * ny

  Complex origin() const { return {static_cast<double>(i0) * h, static_cast<double>(j0) * h}; }
  Complex center(int i, int j) const {
    return {static_cast<double>(i0 + i) * h, static_cast<double>(j0 + j) * h};
  }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx) + static_cast<std::size_t>(i);
  }
  bool at(int i, int j) const { return inside[index(i, j)] != 0; }
  std::size_t count() const;
  /// count() * h^2.
  double mask_area() const;
};

inline constexpr int kDefaultSamplesPerCell = 3;

/// Rasterises phi(base) by forward-mapping a base lattice fine enough to put
/// about samples_per_cell^2 points in every covered target cell, marking the
/// cells hit, eroding one 4-neighbour layer, and clearing every cell whose
/// centre lies within h/2 of the mapped base boundary (this is what cuts
/// slits, e.g. the focal slits of sin on a symmetric rectangle).
/// Deterministic. Throws RasterError when nothing remains.
RasterGrid rasterize(const DomainSpec& spec, double h, int samples_per_cell = kDefaultSamplesPerCell);

/// Euclidean distance (in length units) from every cell centre to the
/// nearest centre of a cell that is not inside; 0 for outside cells.
std::vector<double> distance_to_outside(const RasterGrid& grid);

/// Inradius estimate from the raster: largest distance_to_outside. Outside
/// nodes lie beyond the boundary, so the error is O(h) in either direction.
double raster_inradius(const RasterGrid& grid);

}  // namespace confbound
