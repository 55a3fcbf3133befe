#pragma once

#include <array>
#include <cstdint>
#include <variant>

#include "mstruct/volume.hpp"

namespace mstruct::synth {

// Deterministic fixtures used as oracles and test inputs. All randomness is
// drawn from MT19937-64 seeded with the caller's seed; uniform doubles are
// (x >> 11) * 2^-53 and bounded integers use the 128-bit multiply-shift
// reduction, so any conforming implementation reproduces the same volumes
// byte for byte. The generator and these mappings are part of the public
// contract.

struct BernoulliSpec {
  double p = 0.5;  // per-voxel probability of phase 1
};

struct LaminateSpec {
  Axis axis = Axis::Z;
  int slab_thickness = 1;  // layer k gets label floor(k/thickness) mod 2
};

struct ChannelsSpec {
  Axis axis = Axis::Z;
  double fraction = 0.25;  // target phase-1 column fraction of the cross-section
};

struct SphereSpec {
  std::array<double, 3> center{0, 0, 0};  // voxel coordinates
  double radius = 0;
};

struct HalfSplitSpec {
  Axis axis = Axis::Z;  // lower half along the axis gets phase 1
};

using FixtureVariant =
    std::variant<BernoulliSpec, LaminateSpec, ChannelsSpec, SphereSpec, HalfSplitSpec>;

struct FixtureSpec {
  FixtureVariant variant;
  std::array<int, 3> dims{0, 0, 0};
};

/// Binary Phase volume (labels 0/1, n_phases 2) per the spec variant.
/// Identical (spec, seed) pairs always produce identical volumes.
VoxelVolume generate(const FixtureSpec& spec, std::uint64_t seed);

/// Swaps labels 0 and 1 of a binary Phase volume.
VoxelVolume complement(const VoxelVolume& vol);

}  // namespace mstruct::synth
