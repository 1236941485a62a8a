#pragma once

#include <map>
#include <string>
#include <vector>

#include "ofamas/params.hpp"
#include "ofamas/tensor.hpp"

namespace ofamas::numeric {

struct AdamConfig {
  double lr = 2e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

struct PlateauConfig {
  double factor = 0.5;
  int patience = 10;
  // An epoch improves when its mean loss drops below the best seen by at
  // least this relative margin.
  double rel_threshold = 1e-4;
};

// Adam with bias correction plus reduce-on-plateau learning-rate decay.
// Holds per-parameter moment accumulators keyed by parameter name; the
// learning rate only ever decreases.
class AdamOptimizer {
public:
  explicit AdamOptimizer(AdamConfig adam = {}, PlateauConfig plateau = {});

  // Applies one Adam update for every parameter present in the gradient
  // map. A NaN/Inf gradient aborts before any parameter is modified.
  void step(ModelParams& params, const GradMap& grads);

  // Feeds one epoch-mean loss to the plateau scheduler. Returns true when
  // the learning rate was halved.
  bool observe_epoch(double mean_loss);

  double learning_rate() const { return lr_; }
  double best_loss() const { return best_loss_; }
  int bad_epochs() const { return bad_epochs_; }

private:
  struct Moments {
    std::vector<double> m;
    std::vector<double> v;
    long steps = 0;
  };

  AdamConfig adam_;
  PlateauConfig plateau_;
  double lr_;
  double best_loss_;
  int bad_epochs_ = 0;
  std::map<std::string, Moments> moments_;
};

} // namespace ofamas::numeric
