#include "mstruct/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace mstruct::synth {

namespace {

double uniform01(std::mt19937_64& rng) {
  // 53-bit mantissa draw; identical on every conforming implementation.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

void check_dims(const std::array<int, 3>& dims) {
  if (dims[0] <= 0 || dims[1] <= 0 || dims[2] <= 0) {
    fail(ErrorCode::BadSpec, "fixture dims must be positive");
  }
}

int axis_coord(Axis axis, int x, int y, int z) {
  switch (axis) {
    case Axis::X: return x;
    case Axis::Y: return y;
    case Axis::Z: return z;
  }
  return z;
}

}  // namespace

VoxelVolume generate(const FixtureSpec& spec, std::uint64_t seed) {
  check_dims(spec.dims);
  const auto [nx, ny, nz] = spec.dims;
  const std::size_t n = static_cast<std::size_t>(nx) * ny * nz;
  std::vector<std::uint8_t> data(n, 0);
  std::mt19937_64 rng(seed);

  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BernoulliSpec>) {
          if (!(v.p >= 0.0 && v.p <= 1.0)) {
            fail(ErrorCode::BadSpec, "bernoulli p must lie in [0, 1]");
          }
          for (std::size_t i = 0; i < n; ++i) {
            data[i] = uniform01(rng) < v.p ? 1 : 0;
          }
        } else if constexpr (std::is_same_v<T, LaminateSpec>) {
          if (v.slab_thickness < 1) {
            fail(ErrorCode::BadSpec, "slab_thickness must be >= 1");
          }
          std::size_t i = 0;
          for (int z = 0; z < nz; ++z)
            for (int y = 0; y < ny; ++y)
              for (int x = 0; x < nx; ++x, ++i) {
                const int k = axis_coord(v.axis, x, y, z);
                data[i] = static_cast<std::uint8_t>((k / v.slab_thickness) % 2);
              }
        } else if constexpr (std::is_same_v<T, ChannelsSpec>) {
          if (!(v.fraction >= 0.0 && v.fraction <= 1.0)) {
            fail(ErrorCode::BadSpec, "channels fraction must lie in [0, 1]");
          }
          // Cross-section perpendicular to the channel axis.
          const int a = static_cast<int>(v.axis);
          const int u_dim = spec.dims[(a + 1) % 3];
          const int w_dim = spec.dims[(a + 2) % 3];
          const std::size_t cross = static_cast<std::size_t>(u_dim) * w_dim;
          const std::size_t k = static_cast<std::size_t>(
              std::llround(v.fraction * static_cast<double>(cross)));
          std::vector<std::size_t> columns(cross);
          std::iota(columns.begin(), columns.end(), 0);
          for (std::size_t i = cross; i > 1; --i) {  // Fisher-Yates
            std::swap(columns[i - 1], columns[bounded(rng, i)]);
          }
          for (std::size_t c = 0; c < k; ++c) {
            const int u = static_cast<int>(columns[c] % u_dim);
            const int w = static_cast<int>(columns[c] / u_dim);
            int coords[3];
            coords[(a + 1) % 3] = u;
            coords[(a + 2) % 3] = w;
            for (int t = 0; t < spec.dims[a]; ++t) {
              coords[a] = t;
              data[static_cast<std::size_t>(coords[0]) +
                   static_cast<std::size_t>(nx) *
                       (static_cast<std::size_t>(coords[1]) +
                        static_cast<std::size_t>(ny) * coords[2])] = 1;
            }
          }
        } else if constexpr (std::is_same_v<T, SphereSpec>) {
          if (v.radius < 0) fail(ErrorCode::BadSpec, "sphere radius must be >= 0");
          const double r2 = v.radius * v.radius;
          std::size_t i = 0;
          for (int z = 0; z < nz; ++z)
            for (int y = 0; y < ny; ++y)
              for (int x = 0; x < nx; ++x, ++i) {
                const double dx = x - v.center[0];
                const double dy = y - v.center[1];
                const double dz = z - v.center[2];
                data[i] = dx * dx + dy * dy + dz * dz <= r2 ? 1 : 0;
              }
        } else if constexpr (std::is_same_v<T, HalfSplitSpec>) {
          std::size_t i = 0;
          for (int z = 0; z < nz; ++z)
            for (int y = 0; y < ny; ++y)
              for (int x = 0; x < nx; ++x, ++i) {
                const int k = axis_coord(v.axis, x, y, z);
                data[i] = 2 * k < spec.dims[static_cast<int>(v.axis)] ? 1 : 0;
              }
        }
      },
      spec.variant);

  return VoxelVolume::create(spec.dims, VolumeKind::Phase, 2, 1.0, std::move(data));
}

VoxelVolume complement(const VoxelVolume& vol) {
  if (vol.kind != VolumeKind::Phase || vol.n_phases != 2) {
    fail(ErrorCode::NotBinary, "complement requires a binary phase volume");
  }
  VoxelVolume out = vol;
  for (auto& v : out.data) v = v ? 0 : 1;
  return out;
}

}  // namespace mstruct::synth
