#pragma once

#include <vector>

#include "mstruct/volume.hpp"

namespace mstruct::texture {

/// Pixel-pair directions for co-occurrence counting, measured from the image
/// x axis with y growing downward.
enum class GlcmAngle : int { Deg0 = 0, Deg45 = 45, Deg90 = 90, Deg135 = 135 };

struct GlcmParams {
  int levels = 32;       // gray-level count after quantization
  int distance = 1;      // pixel offset magnitude
  std::vector<GlcmAngle> angles{GlcmAngle::Deg0, GlcmAngle::Deg45,
                                GlcmAngle::Deg90, GlcmAngle::Deg135};
  bool symmetric = true;
  bool normalized = true;

  /// Phase volumes keep the full 8-bit range (256 levels, labels already
  /// spread across it by the gray mapping); natural gray images default to
  /// 32 levels.
  static GlcmParams defaults_for(const VoxelVolume& vol);
};

/// levels x levels co-occurrence matrix P(i,j), row-major.
struct Glcm {
  int levels = 0;
  GlcmParams params;
  std::vector<double> p;

  double at(int i, int j) const {
    return p[static_cast<std::size_t>(i) * levels + j];
  }
};

/// Contrast, homogeneity, energy and entropy of a normalized GLCM.
/// Entropy is in bits with 0*log(0) = 0.
struct FeatureStats {
  double contrast = 0;
  double homogeneity = 0;
  double energy = 0;
  double entropy = 0;
};

enum class Verdict { Isotropy, Anisotropy };

/// Per-axis features, their sample standard deviations across the three
/// axes, the anisotropy index AI = sqrt(sigma_C^2 + sigma_H^2 + sigma_E^2 +
/// sigma_En^2), and the classification: anisotropic iff log10(AI) > 2.
struct AnisotropyReport {
  FeatureStats x, y, z;
  double sigma_contrast = 0;
  double sigma_homogeneity = 0;
  double sigma_energy = 0;
  double sigma_entropy = 0;
  double ai = 0;
  double log10_ai = 0;
  Verdict verdict = Verdict::Isotropy;
};

/// Quantizes gray g to floor(g*levels/256), counts co-occurrences at the
/// given distance for every requested angle into one matrix, adds the
/// transpose when symmetric, divides by the total when normalized.
Glcm glcm(const SliceImage& image, const GlcmParams& params);

FeatureStats glcm_features(const Glcm& g);

/// Per slice along the axis: one GLCM per angle, features averaged across
/// angles; then the unweighted mean over all slices.
FeatureStats directional_features(const VoxelVolume& vol, Axis axis,
                                  const GlcmParams& params);

/// Sample standard deviation (N-1 divisor, N=3) per feature across the three
/// axis values, combined into the anisotropy index.
AnisotropyReport anisotropy_index(const FeatureStats& x, const FeatureStats& y,
                                  const FeatureStats& z);

/// directional_features over X, Y, Z composed with anisotropy_index.
AnisotropyReport classify_volume(const VoxelVolume& vol, const GlcmParams& params);

}  // namespace mstruct::texture
