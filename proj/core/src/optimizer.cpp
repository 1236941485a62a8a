#include "ofamas/optimizer.hpp"

#include <cmath>
#include <limits>

namespace ofamas::numeric {

AdamOptimizer::AdamOptimizer(AdamConfig adam, PlateauConfig plateau)
    : adam_(adam), plateau_(plateau), lr_(adam.lr),
      best_loss_(std::numeric_limits<double>::infinity()) {
  if (adam.lr <= 0.0) throw ConfigError("learning rate must be positive");
}

void AdamOptimizer::step(ModelParams& params, const GradMap& grads) {
  for (const auto& [name, g] : grads) {
    for (double v : g.data()) {
      if (!std::isfinite(v)) {
        throw NumericError("non-finite gradient for parameter " + name + "; step aborted");
      }
    }
  }
  for (const auto& [name, g] : grads) {
    const Tensor& p = params.at(name);
    if (p.shape() != g.shape()) {
      throw DimensionError("gradient shape mismatch for parameter " + name);
    }
    auto& mom = moments_[name];
    if (mom.m.empty()) {
      mom.m.assign(static_cast<std::size_t>(p.size()), 0.0);
      mom.v.assign(static_cast<std::size_t>(p.size()), 0.0);
    }
    mom.steps += 1;
    const double bc1 = 1.0 - std::pow(adam_.beta1, static_cast<double>(mom.steps));
    const double bc2 = 1.0 - std::pow(adam_.beta2, static_cast<double>(mom.steps));
    std::vector<double> next(p.data().begin(), p.data().end());
    for (int i = 0; i < p.size(); ++i) {
      const auto u = static_cast<std::size_t>(i);
      const double gi = g[i];
      mom.m[u] = adam_.beta1 * mom.m[u] + (1.0 - adam_.beta1) * gi;
      mom.v[u] = adam_.beta2 * mom.v[u] + (1.0 - adam_.beta2) * gi * gi;
      const double m_hat = mom.m[u] / bc1;
      const double v_hat = mom.v[u] / bc2;
      next[u] -= lr_ * m_hat / (std::sqrt(v_hat) + adam_.eps);
    }
    params.set(name, Tensor::of(p.shape(), std::move(next)));
  }
}

bool AdamOptimizer::observe_epoch(double mean_loss) {
  if (!std::isfinite(mean_loss)) throw NumericError("non-finite epoch loss");
  const bool improved =
      !std::isfinite(best_loss_) ||
      mean_loss < best_loss_ - plateau_.rel_threshold * std::abs(best_loss_);
  if (improved) {
    best_loss_ = mean_loss;
    bad_epochs_ = 0;
    return false;
  }
  bad_epochs_ += 1;
  if (bad_epochs_ > plateau_.patience) {
    lr_ *= plateau_.factor;
    bad_epochs_ = 0;
    return true;
  }
  return false;
}

} // namespace ofamas::numeric
