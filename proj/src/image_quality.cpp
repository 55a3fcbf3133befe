#include "mstruct/image_quality.hpp"

#include <cmath>
#include <limits>

#include "mstruct/parallel.hpp"

namespace mstruct::quality {

namespace {

void require_same_dims(const SliceImage& a, const SliceImage& b) {
  if (a.width != b.width || a.height != b.height) {
    fail(ErrorCode::DimMismatch,
         "images are " + std::to_string(a.width) + "x" + std::to_string(a.height) +
             " vs " + std::to_string(b.width) + "x" + std::to_string(b.height));
  }
}

void require_params(const SsimParams& params) {
  if (params.window < 3 || params.window % 2 == 0) {
    fail(ErrorCode::ConfigInvalid, "ssim window must be odd and >= 3");
  }
  if (!(params.k1 > 0) || !(params.k2 > 0) || !(params.dynamic_range > 0)) {
    fail(ErrorCode::ConfigInvalid, "ssim constants must be positive");
  }
}

}  // namespace

double mse(const SliceImage& a, const SliceImage& b) {
  require_same_dims(a, b);
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    const int d = static_cast<int>(a.data[i]) - static_cast<int>(b.data[i]);
    sum += static_cast<std::int64_t>(d) * d;
  }
  return static_cast<double>(sum) / static_cast<double>(a.pixel_count());
}

double psnr(const SliceImage& a, const SliceImage& b, double max_i) {
  if (!(max_i > 0)) fail(ErrorCode::ConfigInvalid, "max_i must be positive");
  const double m = mse(a, b);
  if (m == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(max_i * max_i / m);
}

double ssim(const SliceImage& a, const SliceImage& b, const SsimParams& params) {
  require_same_dims(a, b);
  require_params(params);
  const int w = params.window;
  if (a.width < w || a.height < w) {
    fail(ErrorCode::ImageSmallerThanWindow,
         "image " + std::to_string(a.width) + "x" + std::to_string(a.height) +
             " is smaller than the " + std::to_string(w) + "-pixel window");
  }
  const double c1 = params.k1 * params.dynamic_range * params.k1 * params.dynamic_range;
  const double c2 = params.k2 * params.dynamic_range * params.k2 * params.dynamic_range;
  const double inv_n = 1.0 / (static_cast<double>(w) * w);

  double total = 0;
  std::int64_t windows = 0;
  for (int y0 = 0; y0 + w <= a.height; ++y0) {
    for (int x0 = 0; x0 + w <= a.width; ++x0) {
      // Population statistics over the uniform window.
      double sa = 0, sb = 0, saa = 0, sbb = 0, sab = 0;
      for (int y = y0; y < y0 + w; ++y) {
        for (int x = x0; x < x0 + w; ++x) {
          const double va = a.at(x, y);
          const double vb = b.at(x, y);
          sa += va;
          sb += vb;
          saa += va * va;
          sbb += vb * vb;
          sab += va * vb;
        }
      }
      const double mu_a = sa * inv_n;
      const double mu_b = sb * inv_n;
      const double var_a = saa * inv_n - mu_a * mu_a;
      const double var_b = sbb * inv_n - mu_b * mu_b;
      const double cov = sab * inv_n - mu_a * mu_b;
      const double value = ((2.0 * mu_a * mu_b + c1) * (2.0 * cov + c2)) /
                           ((mu_a * mu_a + mu_b * mu_b + c1) * (var_a + var_b + c2));
      total += value;
      ++windows;
    }
  }
  return total / static_cast<double>(windows);
}

QualityReport volume_quality(const VoxelVolume& reference,
                             const VoxelVolume& generated,
                             const SsimParams& params) {
  if (reference.dims != generated.dims) {
    fail(ErrorCode::DimMismatch, "volumes have different dims");
  }
  if (reference.kind != generated.kind) {
    fail(ErrorCode::KindMismatch, "volumes have different kinds");
  }
  require_params(params);

  QualityReport report;
  AxisQuality* per_axis[3] = {&report.x, &report.y, &report.z};
  for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
    const int n = reference.dim(axis);
    std::vector<double> ssim_vals(n), psnr_vals(n);
    std::vector<std::exception_ptr> errors(n);
    parallel_for(n, [&](std::int64_t begin, std::int64_t end) {
      for (std::int64_t i = begin; i < end; ++i) {
        try {
          const SliceImage ra = gray_slice(reference, axis, static_cast<int>(i));
          const SliceImage ga = gray_slice(generated, axis, static_cast<int>(i));
          ssim_vals[i] = ssim(ra, ga, params);
          psnr_vals[i] = psnr(ra, ga, params.dynamic_range);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    double ssim_sum = 0, psnr_sum = 0;
    for (int i = 0; i < n; ++i) {
      ssim_sum += ssim_vals[i];
      psnr_sum += psnr_vals[i];  // +inf propagates
    }
    auto& aq = *per_axis[static_cast<int>(axis)];
    aq.n_slices = n;
    aq.mean_ssim = ssim_sum / n;
    aq.mean_psnr = psnr_sum / n;
  }

  // Overall means are the slice-count-weighted combination of the per-axis
  // means, by definition.
  const double total =
      static_cast<double>(report.x.n_slices + report.y.n_slices + report.z.n_slices);
  report.overall.n_slices = report.x.n_slices + report.y.n_slices + report.z.n_slices;
  report.overall.mean_ssim = (report.x.mean_ssim * report.x.n_slices +
                              report.y.mean_ssim * report.y.n_slices +
                              report.z.mean_ssim * report.z.n_slices) /
                             total;
  report.overall.mean_psnr = (report.x.mean_psnr * report.x.n_slices +
                              report.y.mean_psnr * report.y.n_slices +
                              report.z.mean_psnr * report.z.n_slices) /
                             total;
  return report;
}

}  // namespace mstruct::quality
