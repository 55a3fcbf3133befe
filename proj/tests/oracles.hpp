// Brute-force reference implementations, deliberately written with direct
// point-by-point enumeration and BFS labelling so they stay independent of
// the library's run-length, union-find and windowed-sum code paths.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mstruct/volume.hpp"

namespace oracles {

struct Counts {
  std::vector<std::int64_t> hits;
  std::vector<std::int64_t> samples;
};

// S2: ordered origins with both endpoints in the phase.
Counts s2_counts(const mstruct::VoxelVolume& vol, int phase, mstruct::Axis axis,
                 int r_max, mstruct::BoundaryMode boundary);

// L: origins whose whole segment of r+1 consecutive points stays in the phase.
Counts lineal_counts(const mstruct::VoxelVolume& vol, int phase, mstruct::Axis axis,
                     int r_max, mstruct::BoundaryMode boundary);

// Same-cluster C2: both endpoints in the phase and in the same BFS component.
Counts same_cluster_counts(const mstruct::VoxelVolume& vol, int phase,
                           mstruct::Axis axis, int r_max,
                           mstruct::BoundaryMode boundary, bool full26);

// BFS flood-fill component count.
int component_count(const mstruct::VoxelVolume& vol, int phase, bool full26,
                    mstruct::BoundaryMode boundary);

// Direct windowed SSIM with the uniform-window definition.
double ssim_reference(const mstruct::SliceImage& a, const mstruct::SliceImage& b,
                      int window, double k1, double k2, double dynamic_range);

}  // namespace oracles
