#pragma once

#include <span>
#include <vector>

#include "mstruct/error.hpp"

namespace mstruct::losses {

/// Finite discrete distribution: nonnegative entries summing to 1 within
/// 1e-9. KL and JS use base-2 logs, so JS lies in [0, 1].
struct DiscreteDistribution {
  std::vector<double> probs;

  static DiscreteDistribution from(std::vector<double> probs);
  void validate() const;
};

/// Critic objective sign: the conventional mean(real) - mean(fake), or the
/// as-printed mean(real) + mean(fake).
enum class WganConvention { Standard, LiteralEq6 };

struct LossWeights {
  double lambda_w = 1.0;  // Wasserstein term weight
  double lambda_r = 0.0;  // image-regularization term weight
};

/// sum p*log2(p/q); zero-probability p terms contribute 0; +inf when some
/// p(x) > 0 has q(x) = 0.
double kl_divergence(const DiscreteDistribution& p, const DiscreteDistribution& q);

/// 0.5*KL(P||M) + 0.5*KL(Q||M) with M = 0.5(P+Q); always finite, in [0, 1].
double js_divergence(const DiscreteDistribution& p, const DiscreteDistribution& q);

/// mean(log D(x)) + mean(log(1 - D(G(z)))), natural log. Real scores must lie
/// in (0, 1] and fake scores in [0, 1).
double gan_objective(std::span<const double> real_d, std::span<const double> fake_d);

double wgan_objective(std::span<const double> real_d, std::span<const double> fake_d,
                      WganConvention convention);

/// sum |y_i - g_i|
double l1_loss(std::span<const double> y, std::span<const double> g);

/// sum (y_i - g_i)^2
double l2_loss(std::span<const double> y, std::span<const double> g);

/// lambda_w * wasserstein + lambda_r * regularization
double total_loss(double wasserstein_value, double regularization_value,
                  const LossWeights& weights);

/// Per-element clamp to [-c, c].
std::vector<double> weight_clip(std::span<const double> values, double c);

}  // namespace mstruct::losses
