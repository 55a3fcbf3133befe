#include "mstruct/losses.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mstruct::losses {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    fail(ErrorCode::SizeMismatch, "distributions have " + std::to_string(a) +
                                      " vs " + std::to_string(b) + " entries");
  }
}

void require_batch(std::span<const double> batch, const char* name) {
  if (batch.empty()) {
    fail(ErrorCode::EmptyBatch, std::string(name) + " batch is empty");
  }
  for (double v : batch) {
    if (!std::isfinite(v)) {
      fail(ErrorCode::NonFinite, std::string(name) + " batch has a non-finite score");
    }
  }
}

double mean(std::span<const double> values) {
  double acc = 0;
  for (double v : values) acc += v;
  return acc / static_cast<double>(values.size());
}

}  // namespace

void DiscreteDistribution::validate() const {
  if (probs.empty()) {
    fail(ErrorCode::NotDistribution, "distribution has no entries");
  }
  double sum = 0;
  for (double p : probs) {
    if (!(p >= 0) || !std::isfinite(p)) {
      fail(ErrorCode::NotDistribution, "probabilities must be finite and >= 0");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    fail(ErrorCode::NotDistribution,
         "probabilities sum to " + std::to_string(sum) + ", expected 1");
  }
}

DiscreteDistribution DiscreteDistribution::from(std::vector<double> probs) {
  DiscreteDistribution d{std::move(probs)};
  d.validate();
  return d;
}

double kl_divergence(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  p.validate();
  q.validate();
  require_same_size(p.probs.size(), q.probs.size());
  double acc = 0;
  for (std::size_t i = 0; i < p.probs.size(); ++i) {
    const double pi = p.probs[i];
    if (pi == 0) continue;
    if (q.probs[i] == 0) return std::numeric_limits<double>::infinity();
    acc += pi * std::log2(pi / q.probs[i]);
  }
  return acc;
}

double js_divergence(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  p.validate();
  q.validate();
  require_same_size(p.probs.size(), q.probs.size());
  double acc_p = 0, acc_q = 0;
  for (std::size_t i = 0; i < p.probs.size(); ++i) {
    const double m = 0.5 * (p.probs[i] + q.probs[i]);
    if (p.probs[i] > 0) acc_p += p.probs[i] * std::log2(p.probs[i] / m);
    if (q.probs[i] > 0) acc_q += q.probs[i] * std::log2(q.probs[i] / m);
  }
  return 0.5 * acc_p + 0.5 * acc_q;
}

double gan_objective(std::span<const double> real_d, std::span<const double> fake_d) {
  require_batch(real_d, "real");
  require_batch(fake_d, "fake");
  for (double v : real_d) {
    if (!(v > 0.0 && v <= 1.0)) {
      fail(ErrorCode::DomainViolation, "real scores must lie in (0, 1]");
    }
  }
  for (double v : fake_d) {
    if (!(v >= 0.0 && v < 1.0)) {
      fail(ErrorCode::DomainViolation, "fake scores must lie in [0, 1)");
    }
  }
  double real_acc = 0, fake_acc = 0;
  for (double v : real_d) real_acc += std::log(v);
  for (double v : fake_d) fake_acc += std::log1p(-v);
  return real_acc / static_cast<double>(real_d.size()) +
         fake_acc / static_cast<double>(fake_d.size());
}

double wgan_objective(std::span<const double> real_d, std::span<const double> fake_d,
                      WganConvention convention) {
  require_batch(real_d, "real");
  require_batch(fake_d, "fake");
  const double real_mean = mean(real_d);
  const double fake_mean = mean(fake_d);
  return convention == WganConvention::Standard ? real_mean - fake_mean
                                                : real_mean + fake_mean;
}

double l1_loss(std::span<const double> y, std::span<const double> g) {
  if (y.size() != g.size()) {
    fail(ErrorCode::ShapeMismatch, "arrays have different lengths");
  }
  double acc = 0;
  for (std::size_t i = 0; i < y.size(); ++i) acc += std::abs(y[i] - g[i]);
  return acc;
}

double l2_loss(std::span<const double> y, std::span<const double> g) {
  if (y.size() != g.size()) {
    fail(ErrorCode::ShapeMismatch, "arrays have different lengths");
  }
  double acc = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double d = y[i] - g[i];
    acc += d * d;
  }
  return acc;
}

double total_loss(double wasserstein_value, double regularization_value,
                  const LossWeights& weights) {
  if (!std::isfinite(wasserstein_value) || !std::isfinite(regularization_value) ||
      !std::isfinite(weights.lambda_w) || !std::isfinite(weights.lambda_r)) {
    fail(ErrorCode::NonFinite, "total loss needs finite terms and weights");
  }
  return weights.lambda_w * wasserstein_value + weights.lambda_r * regularization_value;
}

std::vector<double> weight_clip(std::span<const double> values, double c) {
  if (c < 0) fail(ErrorCode::NegativeClip, "clip constant must be >= 0");
  std::vector<double> out(values.begin(), values.end());
  for (auto& v : out) v = std::clamp(v, -c, c);
  return out;
}

}  // namespace mstruct::losses
