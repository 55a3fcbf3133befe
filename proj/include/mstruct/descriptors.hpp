#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mstruct/volume.hpp"

namespace mstruct::descriptors {

/// Descriptor sampling direction: one lattice axis or the unweighted mean of
/// the three per-axis profiles.
enum class Direction : int { X = 0, Y = 1, Z = 2, AxisAverage = 3 };

enum class Connectivity { Face6, Full26 };

/// Two readings of the two-point cluster function: the printed
/// autocovariance normalization S2(r)/phi^2, or the same-connected-component
/// probability its prose describes.
enum class ClusterVariant { LiteralS8, SameCluster };

const char* direction_name(Direction direction);

/// Descriptor curve, one value per lag r = 0..r_max. n_samples holds the
/// valid-origin count per lag and n_hits the raw integer hit count before
/// division, so oracle comparisons can assert exact count equality. For
/// AxisAverage profiles both counts are pooled across the three axes while
/// values stay the unweighted mean of the per-axis values.
struct RadialProfile {
  int phase = 0;
  Direction direction = Direction::X;
  int r_max = 0;
  BoundaryMode boundary = BoundaryMode::Truncated;
  std::vector<double> values;
  std::vector<std::int64_t> n_samples;
  std::vector<std::int64_t> n_hits;
};

/// Sliding-window local porosity distribution: sorted (porosity, cumulative
/// fraction) points, one per distinct window porosity value; the final
/// cumulative fraction is 1.
struct PorosityCdf {
  int phase = 0;
  int window = 0;
  int stride = 0;
  std::vector<std::pair<double, double>> points;
};

/// Per-voxel component ids for one phase; -1 marks voxels of other phases.
/// Ids are dense, assigned in first-encounter scan order.
struct ComponentLabels {
  std::array<int, 3> dims{0, 0, 0};
  std::vector<std::int32_t> labels;
  std::int32_t count = 0;
};

/// S2(r): fraction of ordered origins x with I(x)=1 and I(x + r*e)=1.
/// Periodic wraps x+r and every voxel is a valid origin; Truncated keeps
/// origins whose endpoint stays in bounds.
RadialProfile two_point_correlation(const VoxelVolume& vol, int phase,
                                    Direction direction, int r_max,
                                    BoundaryMode boundary);

/// C2(r) under the chosen variant; SameCluster additionally requires both
/// endpoints in the same connected component (components labelled with the
/// same boundary mode).
RadialProfile two_point_cluster(const VoxelVolume& vol, int phase,
                                Direction direction, int r_max,
                                BoundaryMode boundary, ClusterVariant variant,
                                Connectivity connectivity = Connectivity::Face6);

/// L(r): fraction of origins whose entire segment of r+1 consecutive points
/// lies in the phase.
RadialProfile lineal_path(const VoxelVolume& vol, int phase, Direction direction,
                          int r_max, BoundaryMode boundary);

/// Cubic window of the given edge placed at every corner position that steps
/// by `stride` per axis and fits in bounds; records the mean phase indicator
/// per window and accumulates the CDF of those values.
PorosityCdf local_porosity_cdf(const VoxelVolume& vol, int phase, int window,
                               int stride);

ComponentLabels connected_components(const VoxelVolume& vol, int phase,
                                     Connectivity connectivity,
                                     BoundaryMode boundary);

/// Per-lag unweighted mean of profiles sharing phase, r_max and boundary;
/// the result is tagged AxisAverage.
RadialProfile average_profiles(const std::vector<RadialProfile>& profiles);

}  // namespace mstruct::descriptors
