#include "psf/field.hpp"

#include <cmath>
#include <stdexcept>

#include "psf/fft.hpp"

namespace psf {

FieldState::FieldState(const Grid& grid, int n_components, Representation repr)
    : grid_(grid), n_components_(n_components), repr_(repr) {
  if (n_components < 1) throw std::invalid_argument("FieldState: n_components < 1");
  components_.reserve(n_components);
  for (int c = 0; c < n_components; ++c) {
    components_.push_back(Eigen::ArrayXcd::Zero(grid.total_points()));
  }
}

namespace {

// The offset x0 = -(L+w) = -N*dx/2 turns the coordinate phase e^{-i k_m x0}
// into (-1)^m per dimension, i.e. a checkerboard sign on the raw DFT bins.
void apply_parity_and_scale(const Grid& g, Eigen::ArrayXcd& a, double scale) {
  const int n = g.n();
  if (g.dim() == 1) {
    for (int i = 0; i < n; ++i) a[i] *= ((i & 1) ? -scale : scale);
  } else {
    std::int64_t idx = 0;
    for (int i1 = 0; i1 < n; ++i1) {
      for (int i2 = 0; i2 < n; ++i2, ++idx) {
        a[idx] *= (((i1 + i2) & 1) ? -scale : scale);
      }
    }
  }
}

}  // namespace

FieldState to_frequency(const FieldState& f) {
  if (f.representation() != Representation::position) {
    throw std::invalid_argument("to_frequency: field is not in position representation");
  }
  const Grid& g = f.grid();
  FieldState out(g, f.n_components(), Representation::frequency);
  const double scale = 1.0 / std::sqrt(static_cast<double>(g.total_points()));
  for (int c = 0; c < f.n_components(); ++c) {
    detail::fft_forward_raw(g.dim(), g.n(), f.component(c).data(),
                            out.component(c).data());
    apply_parity_and_scale(g, out.component(c), scale);
  }
  return out;
}

FieldState to_position(const FieldState& f) {
  if (f.representation() != Representation::frequency) {
    throw std::invalid_argument("to_position: field is not in frequency representation");
  }
  const Grid& g = f.grid();
  FieldState out(g, f.n_components(), Representation::position);
  const double scale = 1.0 / std::sqrt(static_cast<double>(g.total_points()));
  Eigen::ArrayXcd tmp(g.total_points());
  for (int c = 0; c < f.n_components(); ++c) {
    tmp = f.component(c);
    apply_parity_and_scale(g, tmp, 1.0);
    detail::fft_inverse_raw(g.dim(), g.n(), tmp.data(), out.component(c).data());
    out.component(c) *= scale;
  }
  return out;
}

double l2_norm(const FieldState& f) {
  double sum = 0.0;
  for (int c = 0; c < f.n_components(); ++c) {
    sum += f.component(c).abs2().sum();
  }
  const double measure = std::pow(f.grid().dx(), f.grid().dim());
  return std::sqrt(sum * measure);
}

double linf_norm(const FieldState& f) {
  double m = 0.0;
  for (int c = 0; c < f.n_components(); ++c) {
    m = std::max(m, f.component(c).abs().maxCoeff());
  }
  return m;
}

}  // namespace psf
