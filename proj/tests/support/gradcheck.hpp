#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "ofamas/params.hpp"
#include "ofamas/tensor.hpp"

namespace testsupport {

// Central finite-difference oracle for reverse-mode gradients. The loss
// function is re-evaluated from the (perturbed) parameter store without a
// tape, so the oracle never touches the backward implementation it checks.
struct GradCheckResult {
  bool ok = true;
  double max_rel_err = 0.0;
  std::string worst; // "param[index]" of the worst disagreement
};

using LossFn =
    std::function<ofamas::numeric::Tensor(const ofamas::numeric::ModelParams&, ofamas::numeric::Tape*)>;

inline GradCheckResult gradcheck(ofamas::numeric::ModelParams& params, const LossFn& loss_fn,
                                 double step = 1e-4, double rel_tol = 1e-3,
                                 double abs_floor = 1e-6) {
  using ofamas::numeric::Tape;
  using ofamas::numeric::Tensor;

  Tape tape;
  Tensor loss = loss_fn(params, &tape);
  auto outcome = tape.backward(loss);

  GradCheckResult result;
  for (const std::string& name : params.names()) {
    const Tensor original = params.at(name);
    auto grad_it = outcome.gradients.find(name);
    for (int i = 0; i < original.size(); ++i) {
      const double analytic = grad_it == outcome.gradients.end() ? 0.0 : grad_it->second[i];

      std::vector<double> bumped(original.data().begin(), original.data().end());
      bumped[static_cast<std::size_t>(i)] += step;
      params.set(name, Tensor::of(original.shape(), bumped));
      const double up = loss_fn(params, nullptr).value();

      bumped[static_cast<std::size_t>(i)] -= 2.0 * step;
      params.set(name, Tensor::of(original.shape(), bumped));
      const double down = loss_fn(params, nullptr).value();

      params.set(name, original);

      const double fd = (up - down) / (2.0 * step);
      const double err = std::abs(analytic - fd);
      const double scale = std::max(std::abs(analytic), std::abs(fd));
      const double rel = err / std::max(scale, abs_floor / rel_tol);
      if (rel > result.max_rel_err) {
        result.max_rel_err = rel;
        result.worst = name + "[" + std::to_string(i) + "]";
      }
      if (err > std::max(rel_tol * scale, abs_floor)) result.ok = false;
    }
  }
  return result;
}

} // namespace testsupport
