#ifndef PSF_SNAPSHOT_IO_HPP
#define PSF_SNAPSHOT_IO_HPP

#include <iosfwd>
#include <string>

#include "psf/field.hpp"

namespace psf {

/// Binary snapshot, bit-exact layout:
///   magic "PSF1"
///   u32 little-endian: version=1, dim, N, n_components
///   f64 little-endian: dx, L, w, t
///   per component, N^dim samples as interleaved (re, im) f64 little-endian,
///   row-major with x1 slowest.
struct Snapshot {
  FieldState field;
  double t;
};

void save_snapshot(const FieldState& f, double t, const std::string& path);
void save_snapshot(const FieldState& f, double t, std::ostream& out);

Snapshot load_snapshot(const std::string& path);
Snapshot load_snapshot(std::istream& in);

}  // namespace psf

#endif
