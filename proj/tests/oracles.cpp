#include "oracles.hpp"

#include <queue>

namespace oracles {

using mstruct::Axis;
using mstruct::BoundaryMode;
using mstruct::VoxelVolume;

namespace {

std::array<int, 3> unit_step(Axis axis) {
  std::array<int, 3> e{0, 0, 0};
  e[static_cast<int>(axis)] = 1;
  return e;
}

bool in_phase(const VoxelVolume& vol, int x, int y, int z, int phase) {
  return vol.at(x, y, z) == phase;
}

}  // namespace

Counts s2_counts(const VoxelVolume& vol, int phase, Axis axis, int r_max,
                 BoundaryMode boundary) {
  const auto [nx, ny, nz] = vol.dims;
  const auto e = unit_step(axis);
  const bool periodic = boundary == BoundaryMode::Periodic;

  Counts c;
  c.hits.assign(r_max + 1, 0);
  c.samples.assign(r_max + 1, 0);
  for (int r = 0; r <= r_max; ++r) {
    for (int z = 0; z < nz; ++z) {
      for (int y = 0; y < ny; ++y) {
        for (int x = 0; x < nx; ++x) {
          int tx = x + r * e[0], ty = y + r * e[1], tz = z + r * e[2];
          if (periodic) {
            tx %= nx;
            ty %= ny;
            tz %= nz;
          } else if (tx >= nx || ty >= ny || tz >= nz) {
            continue;  // origin invalid at this lag
          }
          c.samples[r] += 1;
          if (in_phase(vol, x, y, z, phase) && in_phase(vol, tx, ty, tz, phase)) {
            c.hits[r] += 1;
          }
        }
      }
    }
  }
  return c;
}

Counts lineal_counts(const VoxelVolume& vol, int phase, Axis axis, int r_max,
                     BoundaryMode boundary) {
  const auto [nx, ny, nz] = vol.dims;
  const auto e = unit_step(axis);
  const bool periodic = boundary == BoundaryMode::Periodic;

  Counts c;
  c.hits.assign(r_max + 1, 0);
  c.samples.assign(r_max + 1, 0);
  for (int r = 0; r <= r_max; ++r) {
    for (int z = 0; z < nz; ++z) {
      for (int y = 0; y < ny; ++y) {
        for (int x = 0; x < nx; ++x) {
          const int end_x = x + r * e[0], end_y = y + r * e[1], end_z = z + r * e[2];
          if (!periodic && (end_x >= nx || end_y >= ny || end_z >= nz)) continue;
          c.samples[r] += 1;
          bool all = true;
          for (int k = 0; k <= r && all; ++k) {
            int px = x + k * e[0], py = y + k * e[1], pz = z + k * e[2];
            if (periodic) {
              px %= nx;
              py %= ny;
              pz %= nz;
            }
            all = in_phase(vol, px, py, pz, phase);
          }
          if (all) c.hits[r] += 1;
        }
      }
    }
  }
  return c;
}

namespace {

std::vector<int> bfs_labels(const VoxelVolume& vol, int phase, bool full26,
                            BoundaryMode boundary, int* count_out) {
  const auto [nx, ny, nz] = vol.dims;
  const bool periodic = boundary == BoundaryMode::Periodic;
  std::vector<int> labels(vol.voxel_count(), -1);

  std::vector<std::array<int, 3>> steps;
  for (int dz = -1; dz <= 1; ++dz)
    for (int dy = -1; dy <= 1; ++dy)
      for (int dx = -1; dx <= 1; ++dx) {
        if (dx == 0 && dy == 0 && dz == 0) continue;
        const int manhattan = std::abs(dx) + std::abs(dy) + std::abs(dz);
        if (!full26 && manhattan != 1) continue;
        steps.push_back({dx, dy, dz});
      }

  int next = 0;
  for (int z0 = 0; z0 < nz; ++z0)
    for (int y0 = 0; y0 < ny; ++y0)
      for (int x0 = 0; x0 < nx; ++x0) {
        const std::size_t seed = vol.index(x0, y0, z0);
        if (vol.data[seed] != phase || labels[seed] >= 0) continue;
        const int id = next++;
        std::queue<std::array<int, 3>> queue;
        labels[seed] = id;
        queue.push({x0, y0, z0});
        while (!queue.empty()) {
          const auto [x, y, z] = queue.front();
          queue.pop();
          for (const auto& [dx, dy, dz] : steps) {
            int xx = x + dx, yy = y + dy, zz = z + dz;
            if (periodic) {
              xx = (xx + nx) % nx;
              yy = (yy + ny) % ny;
              zz = (zz + nz) % nz;
            } else if (xx < 0 || yy < 0 || zz < 0 || xx >= nx || yy >= ny ||
                       zz >= nz) {
              continue;
            }
            const std::size_t j = vol.index(xx, yy, zz);
            if (vol.data[j] == phase && labels[j] < 0) {
              labels[j] = id;
              queue.push({xx, yy, zz});
            }
          }
        }
      }
  if (count_out) *count_out = next;
  return labels;
}

}  // namespace

Counts same_cluster_counts(const VoxelVolume& vol, int phase, Axis axis, int r_max,
                           BoundaryMode boundary, bool full26) {
  const auto labels = bfs_labels(vol, phase, full26, boundary, nullptr);
  const auto [nx, ny, nz] = vol.dims;
  const auto e = unit_step(axis);
  const bool periodic = boundary == BoundaryMode::Periodic;

  Counts c;
  c.hits.assign(r_max + 1, 0);
  c.samples.assign(r_max + 1, 0);
  for (int r = 0; r <= r_max; ++r) {
    for (int z = 0; z < nz; ++z) {
      for (int y = 0; y < ny; ++y) {
        for (int x = 0; x < nx; ++x) {
          int tx = x + r * e[0], ty = y + r * e[1], tz = z + r * e[2];
          if (periodic) {
            tx %= nx;
            ty %= ny;
            tz %= nz;
          } else if (tx >= nx || ty >= ny || tz >= nz) {
            continue;
          }
          c.samples[r] += 1;
          const int la = labels[vol.index(x, y, z)];
          const int lb = labels[vol.index(tx, ty, tz)];
          if (la >= 0 && la == lb) c.hits[r] += 1;
        }
      }
    }
  }
  return c;
}

int component_count(const VoxelVolume& vol, int phase, bool full26,
                    BoundaryMode boundary) {
  int count = 0;
  bfs_labels(vol, phase, full26, boundary, &count);
  return count;
}

double ssim_reference(const mstruct::SliceImage& a, const mstruct::SliceImage& b,
                      int window, double k1, double k2, double dynamic_range) {
  const double c1 = (k1 * dynamic_range) * (k1 * dynamic_range);
  const double c2 = (k2 * dynamic_range) * (k2 * dynamic_range);
  const int n = window * window;

  double total = 0;
  int positions = 0;
  for (int y0 = 0; y0 + window <= a.height; ++y0) {
    for (int x0 = 0; x0 + window <= a.width; ++x0) {
      double mu_a = 0, mu_b = 0;
      for (int y = y0; y < y0 + window; ++y)
        for (int x = x0; x < x0 + window; ++x) {
          mu_a += a.at(x, y);
          mu_b += b.at(x, y);
        }
      mu_a /= n;
      mu_b /= n;
      double var_a = 0, var_b = 0, cov = 0;
      for (int y = y0; y < y0 + window; ++y)
        for (int x = x0; x < x0 + window; ++x) {
          const double da = a.at(x, y) - mu_a;
          const double db = b.at(x, y) - mu_b;
          var_a += da * da;
          var_b += db * db;
          cov += da * db;
        }
      var_a /= n;
      var_b /= n;
      cov /= n;
      total += ((2 * mu_a * mu_b + c1) * (2 * cov + c2)) /
               ((mu_a * mu_a + mu_b * mu_b + c1) * (var_a + var_b + c2));
      ++positions;
    }
  }
  return total / positions;
}

}  // namespace oracles
