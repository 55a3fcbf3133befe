#include "mstruct/physics.hpp"

#include <algorithm>
#include <cmath>

#include "mstruct/descriptors.hpp"
#include "mstruct/parallel.hpp"

namespace mstruct::physics {

namespace {

void require_phase_kind(const VoxelVolume& vol) {
  if (vol.kind != VolumeKind::Phase) {
    fail(ErrorCode::NotPhase, "physics metrics require a phase volume");
  }
}

void require_phase_label(const VoxelVolume& vol, int phase) {
  if (phase < 0 || phase >= vol.n_phases) {
    fail(ErrorCode::BadPhase, "phase " + std::to_string(phase) +
                                  " out of range, n_phases is " +
                                  std::to_string(vol.n_phases));
  }
}

int other_dim(const VoxelVolume& vol, Axis axis, int which) {
  return vol.dims[(static_cast<int>(axis) + which) % 3];
}

}  // namespace

std::vector<double> phase_volume_fractions(const VoxelVolume& vol) {
  require_phase_kind(vol);
  std::vector<std::int64_t> counts(vol.n_phases, 0);
  for (auto v : vol.data) counts[v] += 1;
  std::vector<double> fractions(vol.n_phases);
  const double total = static_cast<double>(vol.voxel_count());
  for (int i = 0; i < vol.n_phases; ++i) {
    fractions[i] = static_cast<double>(counts[i]) / total;
  }
  return fractions;
}

double specific_surface_area(const VoxelVolume& vol, int phase,
                             BoundaryMode boundary) {
  require_phase_kind(vol);
  require_phase_label(vol, phase);
  const auto [nx, ny, nz] = vol.dims;
  const bool periodic = boundary == BoundaryMode::Periodic;

  std::int64_t faces = 0;
  auto consider = [&](std::uint8_t a, std::uint8_t b) {
    faces += (a == phase) != (b == phase);
  };
  for (int z = 0; z < nz; ++z)
    for (int y = 0; y < ny; ++y)
      for (int x = 0; x < nx; ++x) {
        const std::uint8_t v = vol.at(x, y, z);
        if (x + 1 < nx) consider(v, vol.at(x + 1, y, z));
        else if (periodic) consider(v, vol.at(0, y, z));
        if (y + 1 < ny) consider(v, vol.at(x, y + 1, z));
        else if (periodic) consider(v, vol.at(x, 0, z));
        if (z + 1 < nz) consider(v, vol.at(x, y, z + 1));
        else if (periodic) consider(v, vol.at(x, y, 0));
      }

  const double a = vol.voxel_size;
  return static_cast<double>(faces) / (static_cast<double>(vol.voxel_count()) * a);
}

double tpb_density(const VoxelVolume& vol, BoundaryMode boundary) {
  require_phase_kind(vol);
  const bool periodic = boundary == BoundaryMode::Periodic;

  std::int64_t edges = 0;
  // Edges parallel to `axis` sit at transverse lattice corners; the four
  // voxels sharing the edge differ by one step in each transverse axis.
  for (int axis = 0; axis < 3; ++axis) {
    const int a1 = (axis + 1) % 3, a2 = (axis + 2) % 3;
    const int n = vol.dims[axis], n1 = vol.dims[a1], n2 = vol.dims[a2];
    for (int c2 = periodic ? 0 : 1; c2 < n2; ++c2) {
      const int p2 = c2 == 0 ? n2 - 1 : c2 - 1;
      for (int c1 = periodic ? 0 : 1; c1 < n1; ++c1) {
        const int p1 = c1 == 0 ? n1 - 1 : c1 - 1;
        for (int t = 0; t < n; ++t) {
          int coords[3];
          coords[axis] = t;
          std::uint8_t labels[4];
          int k = 0;
          for (int u : {p1, c1}) {
            for (int w : {p2, c2}) {
              coords[a1] = u;
              coords[a2] = w;
              labels[k++] = vol.at(coords[0], coords[1], coords[2]);
            }
          }
          std::sort(labels, labels + 4);
          int distinct = 1;
          for (int i = 1; i < 4; ++i) distinct += labels[i] != labels[i - 1];
          edges += distinct >= 3;
        }
      }
    }
  }

  const double a = vol.voxel_size;
  return static_cast<double>(edges) /
         (static_cast<double>(vol.voxel_count()) * a * a);
}

DiffusionResult effective_diffusion(const VoxelVolume& vol, int phase, Axis axis,
                                    const SolverParams& solver) {
  require_phase_kind(vol);
  require_phase_label(vol, phase);
  if (!(solver.tolerance > 0)) {
    fail(ErrorCode::ConfigInvalid, "solver tolerance must be positive");
  }

  DiffusionResult result;
  result.axis = axis;
  result.phase = phase;

  std::int64_t phase_count = 0;
  for (auto v : vol.data) phase_count += v == phase;
  result.phase_fraction =
      static_cast<double>(phase_count) / static_cast<double>(vol.voxel_count());

  // Percolation pre-check: a Face6 component must touch both the inlet
  // (coord 0) and outlet (coord n-1) faces along the transport axis.
  const auto comps = descriptors::connected_components(
      vol, phase, descriptors::Connectivity::Face6, BoundaryMode::Truncated);
  const int n_axis = vol.dim(axis);
  const int cross1 = other_dim(vol, axis, 1);
  const int cross2 = other_dim(vol, axis, 2);

  auto face_voxel = [&](int c_axis, int c1, int c2) {
    int coords[3];
    coords[static_cast<int>(axis)] = c_axis;
    coords[(static_cast<int>(axis) + 1) % 3] = c1;
    coords[(static_cast<int>(axis) + 2) % 3] = c2;
    return vol.index(coords[0], coords[1], coords[2]);
  };

  std::vector<std::uint8_t> touches_in(comps.count, 0), touches_out(comps.count, 0);
  for (int c2 = 0; c2 < cross2; ++c2)
    for (int c1 = 0; c1 < cross1; ++c1) {
      const std::int32_t lin = comps.labels[face_voxel(0, c1, c2)];
      if (lin >= 0) touches_in[lin] = 1;
      const std::int32_t lout = comps.labels[face_voxel(n_axis - 1, c1, c2)];
      if (lout >= 0) touches_out[lout] = 1;
    }
  std::vector<std::uint8_t> spanning(comps.count, 0);
  bool any_spanning = false;
  for (std::int32_t c = 0; c < comps.count; ++c) {
    spanning[c] = touches_in[c] && touches_out[c];
    any_spanning |= spanning[c] != 0;
  }
  if (!any_spanning) {
    result.percolates = false;
    result.d_eff_ratio = 0.0;
    return result;
  }
  result.percolates = true;

  // Unknowns: voxels of spanning components, in scan order. In-phase face
  // neighbours of an unknown are always unknowns themselves (same component).
  const std::size_t n_voxels = vol.voxel_count();
  std::vector<std::int32_t> unknown_of(n_voxels, -1);
  std::vector<std::int32_t> cells;
  for (std::size_t i = 0; i < n_voxels; ++i) {
    const std::int32_t c = comps.labels[i];
    if (c >= 0 && spanning[c]) {
      unknown_of[i] = static_cast<std::int32_t>(cells.size());
      cells.push_back(static_cast<std::int32_t>(i));
    }
  }
  const std::size_t n_unknowns = cells.size();

  const auto [nx, ny, nz] = vol.dims;
  const std::size_t strides[3] = {1, static_cast<std::size_t>(nx),
                                  static_cast<std::size_t>(nx) *
                                      static_cast<std::size_t>(ny)};
  const int axis_i = static_cast<int>(axis);

  // Neighbour table (6 entries per unknown, -1 when absent) plus diagonal
  // and right-hand side with the half-cell Dirichlet couplings.
  std::vector<std::int32_t> neighbors(n_unknowns * 6, -1);
  std::vector<double> diag(n_unknowns, 0.0), rhs(n_unknowns, 0.0);
  std::vector<std::uint8_t> on_inlet(n_unknowns, 0), on_outlet(n_unknowns, 0);
  for (std::size_t u = 0; u < n_unknowns; ++u) {
    const std::size_t i = static_cast<std::size_t>(cells[u]);
    const int x = static_cast<int>(i % nx);
    const int y = static_cast<int>((i / nx) % ny);
    const int z = static_cast<int>(i / (static_cast<std::size_t>(nx) * ny));
    const int coords[3] = {x, y, z};
    int slot = 0;
    for (int d = 0; d < 3; ++d) {
      for (int s : {-1, +1}) {
        const int c = coords[d] + s;
        if (c >= 0 && c < vol.dims[d]) {
          const std::size_t j = s < 0 ? i - strides[d] : i + strides[d];
          const std::int32_t v = unknown_of[j];
          neighbors[u * 6 + slot] = v;
          if (v >= 0) diag[u] += 1.0;
        }
        ++slot;
      }
    }
    const int ca = coords[axis_i];
    if (ca == 0) {
      on_inlet[u] = 1;
      diag[u] += 2.0;
      rhs[u] += 2.0;  // boundary value 1 through conductance 2
    }
    if (ca == n_axis - 1) {
      on_outlet[u] = 1;
      diag[u] += 2.0;  // boundary value 0
    }
  }

  auto matvec = [&](const std::vector<double>& in, std::vector<double>& out) {
    parallel_for(static_cast<std::int64_t>(n_unknowns),
                 [&](std::int64_t begin, std::int64_t end) {
                   for (std::int64_t u = begin; u < end; ++u) {
                     double acc = diag[u] * in[u];
                     const std::int32_t* nb = &neighbors[u * 6];
                     for (int k = 0; k < 6; ++k) {
                       if (nb[k] >= 0) acc -= in[nb[k]];
                     }
                     out[u] = acc;
                   }
                 });
  };
  auto dot = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0;
    for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k];
    return acc;
  };

  const bool jacobi = solver.preconditioner == Preconditioner::Diagonal;
  std::vector<double> x(n_unknowns, 0.0), r = rhs, z(n_unknowns), p(n_unknowns),
      ap(n_unknowns);
  if (jacobi) {
    for (std::size_t k = 0; k < n_unknowns; ++k) z[k] = r[k] / diag[k];
  } else {
    z = r;
  }
  p = z;
  double rz = dot(r, z);
  const double norm_b = std::sqrt(dot(rhs, rhs));
  int max_iterations = solver.max_iterations;
  if (max_iterations <= 0) {
    max_iterations = std::max(
        100, static_cast<int>(20.0 * std::sqrt(static_cast<double>(n_unknowns))));
  }

  double rel_residual = std::sqrt(dot(r, r)) / norm_b;
  int it = 0;
  while (rel_residual > solver.tolerance) {
    if (it >= max_iterations) {
      fail(ErrorCode::SolverDiverged,
           "conjugate gradients did not reach tolerance " +
               std::to_string(solver.tolerance) + " in " +
               std::to_string(max_iterations) + " iterations");
    }
    matvec(p, ap);
    const double alpha = rz / dot(p, ap);
    for (std::size_t k = 0; k < n_unknowns; ++k) x[k] += alpha * p[k];
    for (std::size_t k = 0; k < n_unknowns; ++k) r[k] -= alpha * ap[k];
    ++it;
    rel_residual = std::sqrt(dot(r, r)) / norm_b;
    if (rel_residual <= solver.tolerance) break;
    if (jacobi) {
      for (std::size_t k = 0; k < n_unknowns; ++k) z[k] = r[k] / diag[k];
    } else {
      z = r;
    }
    const double rz_new = dot(r, z);
    const double beta = rz_new / rz;
    rz = rz_new;
    for (std::size_t k = 0; k < n_unknowns; ++k) p[k] = z[k] + beta * p[k];
  }
  result.residual = rel_residual;
  result.iterations = it;

  double flux_in = 0, flux_out = 0;
  for (std::size_t u = 0; u < n_unknowns; ++u) {
    if (on_inlet[u]) flux_in += 2.0 * (1.0 - x[u]);
    if (on_outlet[u]) flux_out += 2.0 * x[u];
  }
  result.inlet_flux = flux_in;
  result.outlet_flux = flux_out;

  const double cross_area = static_cast<double>(cross1) * cross2;
  result.d_eff_ratio =
      0.5 * (flux_in + flux_out) * static_cast<double>(n_axis) / cross_area;
  result.tortuosity = result.phase_fraction / result.d_eff_ratio;
  return result;
}

PhysicsReport physics_report(const VoxelVolume& vol, BoundaryMode boundary) {
  require_phase_kind(vol);
  PhysicsReport report;
  report.boundary = boundary;
  report.phase_fractions = phase_volume_fractions(vol);
  report.ssa.resize(vol.n_phases);
  for (int phase = 0; phase < vol.n_phases; ++phase) {
    report.ssa[phase] = specific_surface_area(vol, phase, boundary);
  }
  report.tpb_density = tpb_density(vol, boundary);
  return report;
}

}  // namespace mstruct::physics
