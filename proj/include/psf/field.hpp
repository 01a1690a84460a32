#ifndef PSF_FIELD_HPP
#define PSF_FIELD_HPP

#include <Eigen/Core>

#include <complex>
#include <vector>

#include "psf/grid.hpp"

namespace psf {

enum class Representation { position, frequency };

/// n-component complex field sampled on a Grid, stored one contiguous array
/// per component (row-major, x1 slowest). Carries its representation tag;
/// the transforms below are unitary, so l2_norm is representation-invariant.
class FieldState {
 public:
  FieldState(const Grid& grid, int n_components,
             Representation repr = Representation::position);

  const Grid& grid() const { return grid_; }
  int n_components() const { return n_components_; }
  Representation representation() const { return repr_; }
  void set_representation(Representation r) { repr_ = r; }

  Eigen::ArrayXcd& component(int c) { return components_[c]; }
  const Eigen::ArrayXcd& component(int c) const { return components_[c]; }

 private:
  Grid grid_;
  int n_components_;
  Representation repr_;
  std::vector<Eigen::ArrayXcd> components_;
};

/// Unitary DFT onto the dual lattice, with phases referenced to the true
/// coordinates x_i = -(L+w) + i*dx (so a plane wave e^{i k0 x} with k0 on the
/// lattice transforms to a single bin at k0). Requires position representation.
FieldState to_frequency(const FieldState& f);

/// Inverse of to_frequency. Requires frequency representation.
FieldState to_position(const FieldState& f);

/// Discrete L2 norm with the dx^dim measure weight, summed over components.
double l2_norm(const FieldState& f);

/// Max complex magnitude over all components and points.
double linf_norm(const FieldState& f);

}  // namespace psf

#endif
