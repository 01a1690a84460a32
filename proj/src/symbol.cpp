#include "psf/symbol.hpp"

#include <stdexcept>

namespace psf {

SymbolField::SymbolField(const Grid& grid, int n_components)
    : grid_(grid), n_components_(n_components) {
  if (n_components < 1) throw std::invalid_argument("SymbolField: n_components < 1");
  entries_.reserve(n_components * n_components);
  for (int e = 0; e < n_components * n_components; ++e) {
    entries_.push_back(Eigen::ArrayXcd::Zero(grid.total_points()));
  }
}

SymbolField SymbolField::identity(const Grid& grid, int n_components) {
  SymbolField s(grid, n_components);
  for (int r = 0; r < n_components; ++r) s.entry(r, r).setOnes();
  return s;
}

Eigen::MatrixXcd SymbolField::at(std::int64_t idx) const {
  Eigen::MatrixXcd m(n_components_, n_components_);
  for (int r = 0; r < n_components_; ++r) {
    for (int c = 0; c < n_components_; ++c) m(r, c) = entry(r, c)[idx];
  }
  return m;
}

void SymbolField::set_at(std::int64_t idx, const Eigen::MatrixXcd& m) {
  for (int r = 0; r < n_components_; ++r) {
    for (int c = 0; c < n_components_; ++c) entry(r, c)[idx] = m(r, c);
  }
}

FieldState apply_symbol(const FieldState& f, const SymbolField& s) {
  if (f.representation() != Representation::frequency) {
    throw std::invalid_argument("apply_symbol: field is not in frequency representation");
  }
  if (f.grid() != s.grid()) {
    throw std::invalid_argument("apply_symbol: grid mismatch");
  }
  if (f.n_components() != s.n_components()) {
    throw std::invalid_argument("apply_symbol: component count mismatch");
  }
  const int n = f.n_components();
  FieldState out(f.grid(), n, Representation::frequency);
  for (int r = 0; r < n; ++r) {
    Eigen::ArrayXcd acc = s.entry(r, 0) * f.component(0);
    for (int c = 1; c < n; ++c) acc += s.entry(r, c) * f.component(c);
    out.component(r) = std::move(acc);
  }
  return out;
}

}  // namespace psf
