#include "psf/snapshot_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace psf {

namespace {

static_assert(std::endian::native == std::endian::little ||
                  std::endian::native == std::endian::big,
              "mixed-endian platforms are not supported");

template <typename T>
void write_le(std::ostream& out, T value) {
  unsigned char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) {
    for (std::size_t i = 0; i < sizeof(T) / 2; ++i) {
      std::swap(bytes[i], bytes[sizeof(T) - 1 - i]);
    }
  }
  out.write(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <typename T>
T read_le(std::istream& in) {
  unsigned char bytes[sizeof(T)];
  in.read(reinterpret_cast<char*>(bytes), sizeof(T));
  if (!in) throw std::runtime_error("snapshot: unexpected end of stream");
  if constexpr (std::endian::native == std::endian::big) {
    for (std::size_t i = 0; i < sizeof(T) / 2; ++i) {
      std::swap(bytes[i], bytes[sizeof(T) - 1 - i]);
    }
  }
  T value;
  std::memcpy(&value, bytes, sizeof(T));
  return value;
}

constexpr char kMagic[4] = {'P', 'S', 'F', '1'};

}  // namespace

void save_snapshot(const FieldState& f, double t, std::ostream& out) {
  if (f.representation() != Representation::position) {
    throw std::invalid_argument("save_snapshot: field must be in position representation");
  }
  const Grid& g = f.grid();
  out.write(kMagic, 4);
  write_le<std::uint32_t>(out, 1u);
  write_le<std::uint32_t>(out, static_cast<std::uint32_t>(g.dim()));
  write_le<std::uint32_t>(out, static_cast<std::uint32_t>(g.n()));
  write_le<std::uint32_t>(out, static_cast<std::uint32_t>(f.n_components()));
  write_le<double>(out, g.dx());
  write_le<double>(out, g.interior_half_width());
  write_le<double>(out, g.buffer_width());
  write_le<double>(out, t);
  for (int c = 0; c < f.n_components(); ++c) {
    const auto& a = f.component(c);
    for (std::int64_t i = 0; i < g.total_points(); ++i) {
      write_le<double>(out, a[i].real());
      write_le<double>(out, a[i].imag());
    }
  }
  if (!out) throw std::runtime_error("save_snapshot: write failed");
}

void save_snapshot(const FieldState& f, double t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("save_snapshot: cannot open " + path);
  save_snapshot(f, t, out);
}

Snapshot load_snapshot(std::istream& in) {
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) {
    throw std::runtime_error("snapshot: bad magic, not a PSF1 file");
  }
  const auto version = read_le<std::uint32_t>(in);
  if (version != 1) {
    throw std::runtime_error("snapshot: unsupported version " + std::to_string(version));
  }
  const auto dim = static_cast<int>(read_le<std::uint32_t>(in));
  const auto n = static_cast<int>(read_le<std::uint32_t>(in));
  const auto n_components = static_cast<int>(read_le<std::uint32_t>(in));
  const double dx = read_le<double>(in);
  const double L = read_le<double>(in);
  const double w = read_le<double>(in);
  const double t = read_le<double>(in);

  Grid grid(dim, L, w, n);
  if (std::abs(grid.dx() - dx) > 1e-12 * dx) {
    throw std::runtime_error("snapshot: header dx inconsistent with N, L, w");
  }
  FieldState f(grid, n_components, Representation::position);
  for (int c = 0; c < n_components; ++c) {
    auto& a = f.component(c);
    for (std::int64_t i = 0; i < grid.total_points(); ++i) {
      const double re = read_le<double>(in);
      const double im = read_le<double>(in);
      a[i] = {re, im};
    }
  }
  return Snapshot{std::move(f), t};
}

Snapshot load_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_snapshot: cannot open " + path);
  return load_snapshot(in);
}

}  // namespace psf
