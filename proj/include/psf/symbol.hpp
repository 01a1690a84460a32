#ifndef PSF_SYMBOL_HPP
#define PSF_SYMBOL_HPP

#include <Eigen/Core>

#include <vector>

#include "psf/field.hpp"
#include "psf/grid.hpp"

namespace psf {

/// One n x n complex matrix per frequency-lattice point, stored as n^2 scalar
/// arrays over k so the per-k matrix multiply vectorizes. Immutable in use.
class SymbolField {
 public:
  SymbolField(const Grid& grid, int n_components);

  static SymbolField identity(const Grid& grid, int n_components);

  const Grid& grid() const { return grid_; }
  int n_components() const { return n_components_; }

  Eigen::ArrayXcd& entry(int row, int col) { return entries_[row * n_components_ + col]; }
  const Eigen::ArrayXcd& entry(int row, int col) const {
    return entries_[row * n_components_ + col];
  }

  /// Matrix at one lattice point (mostly for tests and diagnostics).
  Eigen::MatrixXcd at(std::int64_t idx) const;
  void set_at(std::int64_t idx, const Eigen::MatrixXcd& m);

 private:
  Grid grid_;
  int n_components_;
  std::vector<Eigen::ArrayXcd> entries_;
};

/// Pointwise matrix-vector product S(k) * f(k). Requires frequency
/// representation and matching grid/component dimensions.
FieldState apply_symbol(const FieldState& f, const SymbolField& s);

}  // namespace psf

#endif
