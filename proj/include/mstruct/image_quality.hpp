#pragma once

#include "mstruct/volume.hpp"

namespace mstruct::quality {

struct SsimParams {
  int window = 7;  // square uniform window, stride 1
  double k1 = 0.01;
  double k2 = 0.03;
  double dynamic_range = 255.0;  // L in C1=(k1*L)^2, C2=(k2*L)^2
};

struct AxisQuality {
  int n_slices = 0;
  double mean_ssim = 0;
  double mean_psnr = 0;  // +inf when any compared pair is identical
};

/// Slice-averaged SSIM/PSNR per axis plus the slice-count-weighted overall
/// means. A PSNR of +inf (identical slices) propagates into every mean that
/// contains it.
struct QualityReport {
  AxisQuality x, y, z;
  AxisQuality overall;
};

/// Mean squared pixel difference.
double mse(const SliceImage& a, const SliceImage& b);

/// 10*log10(max_i^2 / MSE); +inf when MSE is 0.
double psnr(const SliceImage& a, const SliceImage& b, double max_i);

/// Mean over all stride-1 window positions of the SSIM ratio with population
/// window statistics.
double ssim(const SliceImage& a, const SliceImage& b, const SsimParams& params);

/// Pairs reference and generated slices by layer index on all three axes.
/// Phase volumes are first mapped to gray exactly as the texture module does.
QualityReport volume_quality(const VoxelVolume& reference,
                             const VoxelVolume& generated,
                             const SsimParams& params);

}  // namespace mstruct::quality
