#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "mstruct/error.hpp"

namespace mstruct {

enum class Axis : int { X = 0, Y = 1, Z = 2 };

/// Lag/adjacency treatment at the volume faces: wrap around (opposing faces
/// contiguous) or stop at the boundary.
enum class BoundaryMode { Periodic, Truncated };

enum class VolumeKind { Phase, Gray };

const char* axis_name(Axis axis);
const char* boundary_name(BoundaryMode boundary);

/// 3D grid of 8-bit voxel values, x-fastest (index = x + nx*(y + ny*z)).
/// Phase volumes carry integer labels in [0, n_phases); Gray volumes carry
/// raw 8-bit intensities and n_phases is 0.
struct VoxelVolume {
  std::array<int, 3> dims{0, 0, 0};
  VolumeKind kind = VolumeKind::Phase;
  int n_phases = 0;
  double voxel_size = 1.0;
  std::vector<std::uint8_t> data;

  int dim(Axis axis) const { return dims[static_cast<int>(axis)]; }
  std::size_t voxel_count() const {
    return static_cast<std::size_t>(dims[0]) * dims[1] * dims[2];
  }
  std::size_t index(int x, int y, int z) const {
    return static_cast<std::size_t>(x) +
           static_cast<std::size_t>(dims[0]) *
               (static_cast<std::size_t>(y) +
                static_cast<std::size_t>(dims[1]) * static_cast<std::size_t>(z));
  }
  std::uint8_t at(int x, int y, int z) const { return data[index(x, y, z)]; }

  /// Throws unless dims are positive, data length matches, voxel_size > 0,
  /// and (Phase kind) every label is below n_phases.
  void validate() const;

  static VoxelVolume create(std::array<int, 3> dims, VolumeKind kind,
                            int n_phases, double voxel_size,
                            std::vector<std::uint8_t> data);
};

/// One 2D layer extracted from a volume. Row-major; the orientation follows
/// the slicing convention of slice() below.
struct SliceImage {
  int width = 0;
  int height = 0;
  Axis source_axis = Axis::Z;
  int source_index = 0;
  std::vector<std::uint8_t> data;

  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width) * height;
  }
  std::uint8_t at(int x, int y) const {
    return data[static_cast<std::size_t>(x) +
                static_cast<std::size_t>(width) * y];
  }
};

// MVX1 container: "MVX1\n", one canonical header line
// "dims=NX,NY,NZ kind=phase|gray n_phases=K voxel_size=V\n", then the raw
// x-fastest payload of exactly NX*NY*NZ bytes. voxel_size uses the shortest
// representation that parses back to the same double, so save->load->save is
// byte-identical.
VoxelVolume load_volume(const std::filesystem::path& path);
void save_volume(const VoxelVolume& vol, const std::filesystem::path& path);

/// Fixed-coordinate extraction. Axis Z yields (w,h)=(nx,ny) with row-major y;
/// axis Y yields (nx,nz); axis X yields (ny,nz).
SliceImage slice(const VoxelVolume& vol, Axis axis, int index);

/// Phase label -> gray mapping used wherever Phase volumes feed image
/// metrics: gray = label * floor(255 / (n_phases - 1)); a single-phase volume
/// maps to 0. Gray volumes pass through unchanged.
std::uint8_t phase_to_gray(int label, int n_phases);
SliceImage gray_slice(const VoxelVolume& vol, Axis axis, int index);

}  // namespace mstruct
