#include "psf/grid.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

namespace psf {

Grid::Grid(int dim, double interior_half_width, double buffer_width, int points_per_dim)
    : dim_(dim),
      interior_half_width_(interior_half_width),
      buffer_width_(buffer_width),
      n_(points_per_dim) {
  if (dim != 1 && dim != 2) {
    throw std::invalid_argument("Grid: dim must be 1 or 2, got " + std::to_string(dim));
  }
  if (interior_half_width <= 0 || buffer_width <= 0) {
    throw std::invalid_argument("Grid: L and w must be positive");
  }
  if (n_ < 4 || !std::has_single_bit(static_cast<unsigned>(n_))) {
    throw std::invalid_argument("Grid: N must be a power of 2 >= 4, got " +
                                std::to_string(n_));
  }
  const double width = 2.0 * extent_half_width();
  dx_ = width / n_;
  // Re-check the defining identity N*dx = 2(L+w) to one part in 1e12.
  if (std::abs(n_ * dx_ - width) > 1e-12 * width) {
    throw std::invalid_argument("Grid: N*dx inconsistent with 2(L+w)");
  }
  dk_ = 2.0 * std::numbers::pi / width;
  kmax_ = std::numbers::pi / dx_;
  total_points_ = 1;
  for (int d = 0; d < dim_; ++d) total_points_ *= n_;

  k_values_.resize(n_);
  for (int i = 0; i < n_; ++i) {
    const int m = (i < n_ / 2) ? i : i - n_;
    k_values_[i] = dk_ * m;
  }
}

Grid Grid::from_spacing(int dim, double interior_half_width, double buffer_width,
                        double dx) {
  if (dx <= 0) throw std::invalid_argument("Grid: dx must be positive");
  const double width = 2.0 * (interior_half_width + buffer_width);
  const double n_real = width / dx;
  const int n = static_cast<int>(std::llround(n_real));
  if (std::abs(n_real - n) > 1e-9 * n_real) {
    throw std::invalid_argument("Grid: 2(L+w)/dx is not an integer");
  }
  return Grid(dim, interior_half_width, buffer_width, n);
}

}  // namespace psf
