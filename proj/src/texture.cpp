#include "mstruct/texture.hpp"

#include <cmath>
#include <cstdint>

#include "mstruct/parallel.hpp"

namespace mstruct::texture {

namespace {

void require_params(const GlcmParams& params) {
  if (params.levels < 2 || params.levels > 256) {
    fail(ErrorCode::ConfigInvalid, "levels must lie in [2, 256]");
  }
  if (params.distance < 1) {
    fail(ErrorCode::ConfigInvalid, "distance must be >= 1");
  }
  if (params.angles.empty()) {
    fail(ErrorCode::ConfigInvalid, "at least one angle is required");
  }
}

// Pixel offset for an angle, y growing downward.
std::pair<int, int> angle_offset(GlcmAngle angle, int distance) {
  switch (angle) {
    case GlcmAngle::Deg0: return {distance, 0};
    case GlcmAngle::Deg45: return {distance, -distance};
    case GlcmAngle::Deg90: return {0, -distance};
    case GlcmAngle::Deg135: return {-distance, -distance};
  }
  return {distance, 0};
}

bool finite(const FeatureStats& f) {
  return std::isfinite(f.contrast) && std::isfinite(f.homogeneity) &&
         std::isfinite(f.energy) && std::isfinite(f.entropy);
}

double sample_stddev3(double a, double b, double c) {
  const double mean = (a + b + c) / 3.0;
  const double da = a - mean, db = b - mean, dc = c - mean;
  return std::sqrt((da * da + db * db + dc * dc) / 2.0);
}

}  // namespace

GlcmParams GlcmParams::defaults_for(const VoxelVolume& vol) {
  GlcmParams params;
  params.levels = vol.kind == VolumeKind::Phase ? 256 : 32;
  return params;
}

Glcm glcm(const SliceImage& image, const GlcmParams& params) {
  require_params(params);
  const int levels = params.levels;

  std::vector<std::int64_t> counts(static_cast<std::size_t>(levels) * levels, 0);
  std::int64_t total = 0;
  for (GlcmAngle angle : params.angles) {
    const auto [dx, dy] = angle_offset(angle, params.distance);
    for (int y = 0; y < image.height; ++y) {
      const int yy = y + dy;
      if (yy < 0 || yy >= image.height) continue;
      for (int x = 0; x < image.width; ++x) {
        const int xx = x + dx;
        if (xx < 0 || xx >= image.width) continue;
        const int qi = image.at(x, y) * levels / 256;
        const int qj = image.at(xx, yy) * levels / 256;
        counts[static_cast<std::size_t>(qi) * levels + qj] += 1;
        ++total;
      }
    }
  }
  if (total == 0) {
    fail(ErrorCode::NoValidPairs,
         "no pixel pair fits the requested offsets in a " +
             std::to_string(image.width) + "x" + std::to_string(image.height) +
             " image");
  }

  Glcm g;
  g.levels = levels;
  g.params = params;
  g.p.resize(counts.size());
  if (params.symmetric) {
    for (int i = 0; i < levels; ++i)
      for (int j = 0; j < levels; ++j) {
        g.p[static_cast<std::size_t>(i) * levels + j] = static_cast<double>(
            counts[static_cast<std::size_t>(i) * levels + j] +
            counts[static_cast<std::size_t>(j) * levels + i]);
      }
    total *= 2;
  } else {
    for (std::size_t i = 0; i < counts.size(); ++i) {
      g.p[i] = static_cast<double>(counts[i]);
    }
  }
  if (params.normalized) {
    const double inv = 1.0 / static_cast<double>(total);
    for (auto& v : g.p) v *= inv;
  }
  return g;
}

FeatureStats glcm_features(const Glcm& g) {
  if (!g.params.normalized) {
    fail(ErrorCode::NotNormalized, "features need a normalized GLCM");
  }
  FeatureStats f;
  const int levels = g.levels;
  for (int i = 0; i < levels; ++i) {
    for (int j = 0; j < levels; ++j) {
      const double p = g.p[static_cast<std::size_t>(i) * levels + j];
      if (p == 0.0) continue;
      const double d2 = static_cast<double>(i - j) * (i - j);
      f.contrast += p * d2;
      f.homogeneity += p / (1.0 + d2);
      f.energy += p * p;
      f.entropy -= p * std::log2(p);
    }
  }
  return f;
}

FeatureStats directional_features(const VoxelVolume& vol, Axis axis,
                                  const GlcmParams& params) {
  require_params(params);
  const int n_slices = vol.dim(axis);
  std::vector<FeatureStats> per_slice(n_slices);
  std::vector<std::exception_ptr> errors(n_slices);

  parallel_for(n_slices, [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t s = begin; s < end; ++s) {
      try {
        const SliceImage img = gray_slice(vol, axis, static_cast<int>(s));
        FeatureStats acc;
        GlcmParams single = params;
        for (GlcmAngle angle : params.angles) {
          single.angles = {angle};
          const FeatureStats f = glcm_features(glcm(img, single));
          acc.contrast += f.contrast;
          acc.homogeneity += f.homogeneity;
          acc.energy += f.energy;
          acc.entropy += f.entropy;
        }
        const double k = static_cast<double>(params.angles.size());
        per_slice[s] = {acc.contrast / k, acc.homogeneity / k, acc.energy / k,
                        acc.entropy / k};
      } catch (...) {
        errors[s] = std::current_exception();
      }
    }
  });
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  FeatureStats mean;
  for (const auto& f : per_slice) {
    mean.contrast += f.contrast;
    mean.homogeneity += f.homogeneity;
    mean.energy += f.energy;
    mean.entropy += f.entropy;
  }
  const double k = static_cast<double>(n_slices);
  return {mean.contrast / k, mean.homogeneity / k, mean.energy / k,
          mean.entropy / k};
}

AnisotropyReport anisotropy_index(const FeatureStats& x, const FeatureStats& y,
                                  const FeatureStats& z) {
  if (!finite(x) || !finite(y) || !finite(z)) {
    fail(ErrorCode::NonFinite, "anisotropy index needs finite feature stats");
  }
  AnisotropyReport report;
  report.x = x;
  report.y = y;
  report.z = z;
  report.sigma_contrast = sample_stddev3(x.contrast, y.contrast, z.contrast);
  report.sigma_homogeneity =
      sample_stddev3(x.homogeneity, y.homogeneity, z.homogeneity);
  report.sigma_energy = sample_stddev3(x.energy, y.energy, z.energy);
  report.sigma_entropy = sample_stddev3(x.entropy, y.entropy, z.entropy);
  report.ai = std::sqrt(report.sigma_contrast * report.sigma_contrast +
                        report.sigma_homogeneity * report.sigma_homogeneity +
                        report.sigma_energy * report.sigma_energy +
                        report.sigma_entropy * report.sigma_entropy);
  report.log10_ai = std::log10(report.ai);
  report.verdict =
      report.log10_ai > 2.0 ? Verdict::Anisotropy : Verdict::Isotropy;
  return report;
}

AnisotropyReport classify_volume(const VoxelVolume& vol, const GlcmParams& params) {
  return anisotropy_index(directional_features(vol, Axis::X, params),
                          directional_features(vol, Axis::Y, params),
                          directional_features(vol, Axis::Z, params));
}

}  // namespace mstruct::texture
