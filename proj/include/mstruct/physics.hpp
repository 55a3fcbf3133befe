#pragma once

#include <optional>
#include <vector>

#include "mstruct/volume.hpp"

namespace mstruct::physics {

/// Face-counting interface and edge-counting triple-phase statistics in
/// physical units derived from voxel_size.
struct PhysicsReport {
  std::vector<double> phase_fractions;  // per label, sums to 1
  std::vector<double> ssa;              // per label, interface area / volume
  double tpb_density = 0;               // triple-phase edge length / volume
  BoundaryMode boundary = BoundaryMode::Truncated;
};

enum class Preconditioner { None, Diagonal };

struct SolverParams {
  double tolerance = 1e-8;   // relative residual target
  int max_iterations = 0;    // 0 = 20*sqrt(n_unknowns), at least 100
  Preconditioner preconditioner = Preconditioner::Diagonal;
};

/// Steady-state diffusion through one phase along one axis.
/// Non-percolating media report ratio 0 with tortuosity unset.
struct DiffusionResult {
  Axis axis = Axis::Z;
  int phase = 0;
  bool percolates = false;
  double d_eff_ratio = 0;                // D_eff / D0 in [0, 1]
  std::optional<double> tortuosity;      // phi / (D_eff/D0), >= 1
  double phase_fraction = 0;
  double inlet_flux = 0;
  double outlet_flux = 0;
  double residual = 0;
  int iterations = 0;
};

/// Exact label counts divided by the voxel total.
std::vector<double> phase_volume_fractions(const VoxelVolume& vol);

/// Counts voxel faces where the phase abuts any other label; face pairs wrap
/// when Periodic, domain-boundary faces are never interfaces when Truncated.
/// SSA = count * a^2 / (nx*ny*nz * a^3).
double specific_surface_area(const VoxelVolume& vol, int phase,
                             BoundaryMode boundary);

/// A lattice edge shared by 4 voxels is a triple-phase edge when at least 3
/// distinct labels appear among them. Density = count * a / (nx*ny*nz * a^3).
double tpb_density(const VoxelVolume& vol, BoundaryMode boundary);

/// 7-point finite-volume Laplace solve on the phase network: unit conductance
/// between face-adjacent in-phase voxels, Dirichlet values 1/0 applied
/// through the inlet/outlet faces at half-cell distance, no-flux lateral
/// walls, conjugate gradients to the relative-residual tolerance. Percolation
/// is pre-checked with Face6 components; without a spanning component the
/// solve is skipped and the ratio is 0.
DiffusionResult effective_diffusion(const VoxelVolume& vol, int phase, Axis axis,
                                    const SolverParams& solver = {});

/// Fractions, per-phase SSA and TPB density in one pass of bookkeeping.
PhysicsReport physics_report(const VoxelVolume& vol, BoundaryMode boundary);

}  // namespace mstruct::physics
