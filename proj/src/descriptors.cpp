#include "mstruct/descriptors.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

#include "mstruct/parallel.hpp"

namespace mstruct::descriptors {

namespace {

void require_phase_volume(const VoxelVolume& vol, int phase) {
  if (vol.kind != VolumeKind::Phase) {
    fail(ErrorCode::BadPhase, "descriptors require a phase volume");
  }
  if (phase < 0 || phase >= vol.n_phases) {
    fail(ErrorCode::BadPhase, "phase " + std::to_string(phase) +
                                  " out of range, n_phases is " +
                                  std::to_string(vol.n_phases));
  }
}

void require_lag(const VoxelVolume& vol, Axis axis, int r_max,
                 BoundaryMode boundary) {
  const int n = vol.dim(axis);
  if (r_max < 0) fail(ErrorCode::LagTooLarge, "r_max must be >= 0");
  const bool ok = boundary == BoundaryMode::Periodic ? r_max <= n : r_max < n;
  if (!ok) {
    fail(ErrorCode::LagTooLarge,
         "r_max " + std::to_string(r_max) + " too large for axis " +
             axis_name(axis) + " of length " + std::to_string(n) + " (" +
             boundary_name(boundary) + ")");
  }
}

std::vector<std::uint8_t> phase_mask(const VoxelVolume& vol, int phase) {
  std::vector<std::uint8_t> mask(vol.voxel_count());
  for (std::size_t i = 0; i < mask.size(); ++i) {
    mask[i] = vol.data[i] == phase ? 1 : 0;
  }
  return mask;
}

struct LineGeometry {
  int n = 0;                  // length along the scan axis
  std::size_t axis_stride = 0;
  std::int64_t line_count = 0;
  int d1 = 0;                 // first transverse dim
  std::size_t s1 = 0, s2 = 0; // transverse strides
};

LineGeometry line_geometry(const std::array<int, 3>& dims, Axis axis) {
  const std::size_t strides[3] = {
      1, static_cast<std::size_t>(dims[0]),
      static_cast<std::size_t>(dims[0]) * static_cast<std::size_t>(dims[1])};
  const int a = static_cast<int>(axis);
  const int o1 = (a + 1) % 3;
  const int o2 = (a + 2) % 3;
  LineGeometry g;
  g.n = dims[a];
  g.axis_stride = strides[a];
  g.line_count = static_cast<std::int64_t>(dims[o1]) * dims[o2];
  g.d1 = dims[o1];
  g.s1 = strides[o1];
  g.s2 = strides[o2];
  return g;
}

std::size_t line_base(const LineGeometry& g, std::int64_t line) {
  const std::int64_t c1 = line % g.d1;
  const std::int64_t c2 = line / g.d1;
  return static_cast<std::size_t>(c1) * g.s1 + static_cast<std::size_t>(c2) * g.s2;
}

// Runs `count_line` over every lattice line along `axis`, accumulating
// per-lag integer hit counts. Counts are integers, so the reduction is
// schedule-independent.
template <typename CountLine>
std::vector<std::int64_t> accumulate_lines(const std::array<int, 3>& dims,
                                           Axis axis, int r_max,
                                           CountLine&& count_line) {
  const LineGeometry g = line_geometry(dims, axis);
  const int workers =
      static_cast<int>(std::min<std::int64_t>(worker_count(), g.line_count));
  std::vector<std::vector<std::int64_t>> partial(
      std::max(workers, 1), std::vector<std::int64_t>(r_max + 1, 0));

  const std::int64_t per = (g.line_count + workers - 1) / workers;
  parallel_for(workers, [&](std::int64_t wb, std::int64_t we) {
    for (std::int64_t w = wb; w < we; ++w) {
      auto& hits = partial[w];
      const std::int64_t begin = per * w;
      const std::int64_t end = std::min(begin + per, g.line_count);
      for (std::int64_t line = begin; line < end; ++line) {
        count_line(line_base(g, line), g, hits);
      }
    }
  });

  std::vector<std::int64_t> hits(r_max + 1, 0);
  for (const auto& p : partial) {
    for (int r = 0; r <= r_max; ++r) hits[r] += p[r];
  }
  return hits;
}

std::vector<std::int64_t> sample_counts(const std::array<int, 3>& dims, Axis axis,
                                        int r_max, BoundaryMode boundary) {
  const LineGeometry g = line_geometry(dims, axis);
  std::vector<std::int64_t> samples(r_max + 1);
  for (int r = 0; r <= r_max; ++r) {
    samples[r] = boundary == BoundaryMode::Periodic
                     ? g.line_count * g.n
                     : g.line_count * (g.n - r);
  }
  return samples;
}

RadialProfile make_profile(int phase, Direction direction, int r_max,
                           BoundaryMode boundary, std::vector<std::int64_t> hits,
                           std::vector<std::int64_t> samples) {
  RadialProfile p;
  p.phase = phase;
  p.direction = direction;
  p.r_max = r_max;
  p.boundary = boundary;
  p.values.resize(hits.size());
  for (std::size_t r = 0; r < hits.size(); ++r) {
    p.values[r] = static_cast<double>(hits[r]) / static_cast<double>(samples[r]);
  }
  p.n_hits = std::move(hits);
  p.n_samples = std::move(samples);
  return p;
}

Direction axis_direction(Axis axis) { return static_cast<Direction>(axis); }

// Per-axis S2 hit counts.
std::vector<std::int64_t> s2_hits(const std::vector<std::uint8_t>& mask,
                                  const std::array<int, 3>& dims, Axis axis,
                                  int r_max, BoundaryMode boundary) {
  const bool periodic = boundary == BoundaryMode::Periodic;
  return accumulate_lines(
      dims, axis, r_max,
      [&, periodic, r_max](std::size_t base, const LineGeometry& g,
                           std::vector<std::int64_t>& hits) {
        thread_local std::vector<std::uint8_t> buf;
        const int n = g.n;
        buf.resize(periodic ? 2 * n : n);
        for (int t = 0; t < n; ++t) buf[t] = mask[base + t * g.axis_stride];
        if (periodic) std::copy_n(buf.begin(), n, buf.begin() + n);
        for (int r = 0; r <= r_max; ++r) {
          const int origins = periodic ? n : n - r;
          std::int64_t h = 0;
          for (int t = 0; t < origins; ++t) h += buf[t] & buf[t + r];
          hits[r] += h;
        }
      });
}

// Per-axis lineal-path hit counts via run-length decomposition.
std::vector<std::int64_t> lineal_hits(const std::vector<std::uint8_t>& mask,
                                      const std::array<int, 3>& dims, Axis axis,
                                      int r_max, BoundaryMode boundary) {
  const bool periodic = boundary == BoundaryMode::Periodic;
  return accumulate_lines(
      dims, axis, r_max,
      [&, periodic, r_max](std::size_t base, const LineGeometry& g,
                           std::vector<std::int64_t>& hits) {
        thread_local std::vector<std::uint8_t> buf;
        const int n = g.n;
        buf.resize(n);
        int ones = 0;
        for (int t = 0; t < n; ++t) {
          buf[t] = mask[base + t * g.axis_stride];
          ones += buf[t];
        }
        auto add_run = [&](int len) {
          const int top = std::min(len - 1, r_max);
          for (int r = 0; r <= top; ++r) hits[r] += len - r;
        };
        if (periodic) {
          if (ones == n) {
            // Fully occupied circle: every origin works for every lag.
            for (int r = 0; r <= r_max; ++r) hits[r] += n;
            return;
          }
          int start = 0;
          while (buf[start]) ++start;  // a zero exists
          int run = 0;
          for (int k = 0; k < n; ++k) {
            if (buf[(start + k) % n]) {
              ++run;
            } else if (run) {
              add_run(run);
              run = 0;
            }
          }
          if (run) add_run(run);
        } else {
          int run = 0;
          for (int t = 0; t < n; ++t) {
            if (buf[t]) {
              ++run;
            } else if (run) {
              add_run(run);
              run = 0;
            }
          }
          if (run) add_run(run);
        }
      });
}

// Per-axis same-component pair counts.
std::vector<std::int64_t> cluster_hits(const std::vector<std::int32_t>& ids,
                                       const std::array<int, 3>& dims, Axis axis,
                                       int r_max, BoundaryMode boundary) {
  const bool periodic = boundary == BoundaryMode::Periodic;
  return accumulate_lines(
      dims, axis, r_max,
      [&, periodic, r_max](std::size_t base, const LineGeometry& g,
                           std::vector<std::int64_t>& hits) {
        thread_local std::vector<std::int32_t> buf;
        const int n = g.n;
        buf.resize(periodic ? 2 * n : n);
        for (int t = 0; t < n; ++t) buf[t] = ids[base + t * g.axis_stride];
        if (periodic) std::copy_n(buf.begin(), n, buf.begin() + n);
        for (int r = 0; r <= r_max; ++r) {
          const int origins = periodic ? n : n - r;
          std::int64_t h = 0;
          for (int t = 0; t < origins; ++t) {
            h += buf[t] >= 0 && buf[t] == buf[t + r];
          }
          hits[r] += h;
        }
      });
}

template <typename PerAxis>
RadialProfile directional_profile(const VoxelVolume& vol, int phase,
                                  Direction direction, int r_max,
                                  BoundaryMode boundary, PerAxis&& per_axis) {
  if (direction == Direction::AxisAverage) {
    std::vector<RadialProfile> parts;
    for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) require_lag(vol, axis, r_max, boundary);
    for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
      parts.push_back(make_profile(phase, axis_direction(axis), r_max, boundary,
                                   per_axis(axis),
                                   sample_counts(vol.dims, axis, r_max, boundary)));
    }
    return average_profiles(parts);
  }
  const Axis axis = static_cast<Axis>(direction);
  require_lag(vol, axis, r_max, boundary);
  return make_profile(phase, direction, r_max, boundary, per_axis(axis),
                      sample_counts(vol.dims, axis, r_max, boundary));
}

struct UnionFind {
  std::vector<std::int32_t> parent;

  explicit UnionFind(std::size_t n) : parent(n, -1) {}

  void make(std::size_t i) { parent[i] = static_cast<std::int32_t>(i); }

  std::int32_t find(std::int32_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }

  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

const char* direction_name(Direction direction) {
  switch (direction) {
    case Direction::X: return "x";
    case Direction::Y: return "y";
    case Direction::Z: return "z";
    case Direction::AxisAverage: return "avg";
  }
  return "?";
}

RadialProfile two_point_correlation(const VoxelVolume& vol, int phase,
                                    Direction direction, int r_max,
                                    BoundaryMode boundary) {
  require_phase_volume(vol, phase);
  const auto mask = phase_mask(vol, phase);
  return directional_profile(vol, phase, direction, r_max, boundary,
                             [&](Axis axis) {
                               return s2_hits(mask, vol.dims, axis, r_max, boundary);
                             });
}

RadialProfile two_point_cluster(const VoxelVolume& vol, int phase,
                                Direction direction, int r_max,
                                BoundaryMode boundary, ClusterVariant variant,
                                Connectivity connectivity) {
  require_phase_volume(vol, phase);
  if (variant == ClusterVariant::LiteralS8) {
    std::size_t count = 0;
    for (auto v : vol.data) count += v == phase;
    if (count == 0) {
      fail(ErrorCode::EmptyPhase,
           "phase " + std::to_string(phase) + " is empty; S2/phi^2 is undefined");
    }
    const double phi =
        static_cast<double>(count) / static_cast<double>(vol.voxel_count());
    RadialProfile p = two_point_correlation(vol, phase, direction, r_max, boundary);
    for (auto& v : p.values) v /= phi * phi;
    return p;
  }
  const ComponentLabels comps =
      connected_components(vol, phase, connectivity, boundary);
  return directional_profile(vol, phase, direction, r_max, boundary,
                             [&](Axis axis) {
                               return cluster_hits(comps.labels, vol.dims, axis,
                                                   r_max, boundary);
                             });
}

RadialProfile lineal_path(const VoxelVolume& vol, int phase, Direction direction,
                          int r_max, BoundaryMode boundary) {
  require_phase_volume(vol, phase);
  const auto mask = phase_mask(vol, phase);
  return directional_profile(vol, phase, direction, r_max, boundary,
                             [&](Axis axis) {
                               return lineal_hits(mask, vol.dims, axis, r_max, boundary);
                             });
}

PorosityCdf local_porosity_cdf(const VoxelVolume& vol, int phase, int window,
                               int stride) {
  require_phase_volume(vol, phase);
  const auto [nx, ny, nz] = vol.dims;
  if (window < 1 || window > nx || window > ny || window > nz) {
    fail(ErrorCode::WindowTooLarge,
         "window " + std::to_string(window) + " does not fit in volume dims");
  }
  if (stride < 1) fail(ErrorCode::ConfigInvalid, "stride must be >= 1");

  // Inclusion-exclusion over a 3D summed-area table of the phase indicator.
  const std::size_t pnx = nx + 1, pny = ny + 1, pnz = nz + 1;
  std::vector<std::uint64_t> sat(pnx * pny * pnz, 0);
  auto sat_at = [&](std::size_t x, std::size_t y, std::size_t z) -> std::uint64_t& {
    return sat[x + pnx * (y + pny * z)];
  };
  for (int z = 0; z < nz; ++z)
    for (int y = 0; y < ny; ++y)
      for (int x = 0; x < nx; ++x) {
        const std::uint64_t v = vol.at(x, y, z) == phase ? 1 : 0;
        sat_at(x + 1, y + 1, z + 1) =
            v + sat_at(x, y + 1, z + 1) + sat_at(x + 1, y, z + 1) +
            sat_at(x + 1, y + 1, z) - sat_at(x, y, z + 1) - sat_at(x, y + 1, z) -
            sat_at(x + 1, y, z) + sat_at(x, y, z);
      }
  auto box_sum = [&](int x0, int y0, int z0) {
    const int x1 = x0 + window, y1 = y0 + window, z1 = z0 + window;
    return sat_at(x1, y1, z1) - sat_at(x0, y1, z1) - sat_at(x1, y0, z1) -
           sat_at(x1, y1, z0) + sat_at(x0, y0, z1) + sat_at(x0, y1, z0) +
           sat_at(x1, y0, z0) - sat_at(x0, y0, z0);
  };

  const double cell_count = static_cast<double>(window) * window * window;
  std::vector<double> porosities;
  for (int z0 = 0; z0 + window <= nz; z0 += stride)
    for (int y0 = 0; y0 + window <= ny; y0 += stride)
      for (int x0 = 0; x0 + window <= nx; x0 += stride) {
        porosities.push_back(static_cast<double>(box_sum(x0, y0, z0)) / cell_count);
      }

  std::sort(porosities.begin(), porosities.end());
  PorosityCdf cdf;
  cdf.phase = phase;
  cdf.window = window;
  cdf.stride = stride;
  const double total = static_cast<double>(porosities.size());
  for (std::size_t i = 0; i < porosities.size(); ++i) {
    if (i + 1 < porosities.size() && porosities[i + 1] == porosities[i]) continue;
    cdf.points.emplace_back(porosities[i], static_cast<double>(i + 1) / total);
  }
  return cdf;
}

ComponentLabels connected_components(const VoxelVolume& vol, int phase,
                                     Connectivity connectivity,
                                     BoundaryMode boundary) {
  require_phase_volume(vol, phase);
  const auto [nx, ny, nz] = vol.dims;
  const std::size_t n = vol.voxel_count();
  const bool periodic = boundary == BoundaryMode::Periodic;

  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (vol.data[i] == phase) uf.make(i);
  }

  // Offsets pointing at already-visited voxels in scan order.
  std::vector<std::array<int, 3>> offsets;
  if (connectivity == Connectivity::Face6) {
    offsets = {{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
  } else {
    for (int dz = -1; dz <= 0; ++dz)
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
          if (dz > 0) continue;
          if (dz == 0 && (dy > 0 || (dy == 0 && dx >= 0))) continue;
          offsets.push_back({dx, dy, dz});
        }
  }

  auto wrap = [](int c, int dim) { return c < 0 ? c + dim : (c >= dim ? c - dim : c); };
  std::size_t i = 0;
  for (int z = 0; z < nz; ++z)
    for (int y = 0; y < ny; ++y)
      for (int x = 0; x < nx; ++x, ++i) {
        if (vol.data[i] != phase) continue;
        for (const auto& [dx, dy, dz] : offsets) {
          int xx = x + dx, yy = y + dy, zz = z + dz;
          if (periodic) {
            xx = wrap(xx, nx);
            yy = wrap(yy, ny);
            zz = wrap(zz, nz);
          } else if (xx < 0 || yy < 0 || zz < 0 || xx >= nx || yy >= ny || zz >= nz) {
            continue;
          }
          const std::size_t j = vol.index(xx, yy, zz);
          if (vol.data[j] == phase) {
            uf.unite(static_cast<std::int32_t>(i), static_cast<std::int32_t>(j));
          }
        }
      }

  // Periodic mode also joins across the opposite faces for every offset, not
  // only the negative-side wrap handled above; the negative wrap already
  // covers them because every face pair is seen from one of its sides.

  ComponentLabels out;
  out.dims = vol.dims;
  out.labels.assign(n, -1);
  std::vector<std::int32_t> dense(n, -1);
  std::int32_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (vol.data[v] != phase) continue;
    const std::int32_t root = uf.find(static_cast<std::int32_t>(v));
    if (dense[root] < 0) dense[root] = next++;
    out.labels[v] = dense[root];
  }
  out.count = next;
  return out;
}

RadialProfile average_profiles(const std::vector<RadialProfile>& profiles) {
  if (profiles.empty()) {
    fail(ErrorCode::MixedShapes, "cannot average an empty profile list");
  }
  const auto& first = profiles.front();
  for (const auto& p : profiles) {
    if (p.phase != first.phase || p.r_max != first.r_max ||
        p.boundary != first.boundary ||
        p.values.size() != first.values.size()) {
      fail(ErrorCode::MixedShapes,
           "profiles disagree on phase, r_max or boundary");
    }
  }
  RadialProfile avg;
  avg.phase = first.phase;
  avg.direction = Direction::AxisAverage;
  avg.r_max = first.r_max;
  avg.boundary = first.boundary;
  avg.values.assign(first.values.size(), 0.0);
  avg.n_samples.assign(first.values.size(), 0);
  avg.n_hits.assign(first.values.size(), 0);
  for (const auto& p : profiles) {
    for (std::size_t r = 0; r < avg.values.size(); ++r) {
      avg.values[r] += p.values[r];
      if (r < p.n_samples.size()) avg.n_samples[r] += p.n_samples[r];
      if (r < p.n_hits.size()) avg.n_hits[r] += p.n_hits[r];
    }
  }
  for (auto& v : avg.values) v /= static_cast<double>(profiles.size());
  return avg;
}

}  // namespace mstruct::descriptors
