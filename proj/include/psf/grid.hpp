#ifndef PSF_GRID_HPP
#define PSF_GRID_HPP

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>

namespace psf {

/// Uniform periodic lattice over [-L-w, L+w]^dim together with its DFT dual
/// frequency lattice. Immutable after construction and freely shareable.
///
/// Position samples are x_i = -(L+w) + i*dx. Frequencies use the angular
/// convention k_m = 2*pi*m/(N*dx) with m in the standard DFT order
/// (0, 1, ..., N/2-1, -N/2, ..., -1), so kmax = pi/dx.
class Grid {
 public:
  Grid(int dim, double interior_half_width, double buffer_width, int points_per_dim);

  /// Same grid, but specified by spacing; N = 2(L+w)/dx must be a power of 2.
  static Grid from_spacing(int dim, double interior_half_width, double buffer_width,
                           double dx);

  int dim() const { return dim_; }
  int n() const { return n_; }
  std::int64_t total_points() const { return total_points_; }
  double interior_half_width() const { return interior_half_width_; }  // L
  double buffer_width() const { return buffer_width_; }                // w
  double extent_half_width() const { return interior_half_width_ + buffer_width_; }
  double dx() const { return dx_; }
  double dk() const { return dk_; }
  double kmax() const { return kmax_; }

  /// Coordinate of the i-th position sample along any axis.
  double x(int i) const { return -extent_half_width() + i * dx_; }
  /// Frequency of the i-th dual-lattice point along any axis.
  double k(int i) const { return k_values_[i]; }
  const Eigen::ArrayXd& k_values() const { return k_values_; }

  /// Row-major flattening with x1 slowest: (i1, i2) -> i1*N + i2.
  std::int64_t flatten(int i1, int i2 = 0) const {
    return dim_ == 1 ? i1 : static_cast<std::int64_t>(i1) * n_ + i2;
  }

  bool operator==(const Grid& other) const {
    return dim_ == other.dim_ && n_ == other.n_ &&
           interior_half_width_ == other.interior_half_width_ &&
           buffer_width_ == other.buffer_width_;
  }
  bool operator!=(const Grid& other) const { return !(*this == other); }

 private:
  int dim_;
  double interior_half_width_;
  double buffer_width_;
  double dx_;
  double dk_;
  double kmax_;
  int n_;
  std::int64_t total_points_;
  Eigen::ArrayXd k_values_;
};

}  // namespace psf

#endif
