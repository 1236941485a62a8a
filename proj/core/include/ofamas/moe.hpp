#pragma once

#include <span>

#include "ofamas/embed.hpp"
#include "ofamas/params.hpp"
#include "ofamas/rng.hpp"
#include "ofamas/tensor.hpp"

namespace ofamas::moe {

struct MoeConfig {
  int experts = 8; // K_e
  int expert_hidden = 256;
  int gate_hidden = 256;
  int num_role_classes = 20; // domain roles + END
  int d_h = 256;
  int task_dim = 128;
};

// Registers moe.gate.* and per-expert moe.node{k}.* / moe.edge{k}.* weights.
void init_params(numeric::ModelParams& params, const MoeConfig& config, numeric::Rng& rng);

// Expert activation weights w = softmax(MLP_gate(z)); length K_e, sums to 1.
numeric::Tensor gate(const embed::TaskVector& z, const numeric::ModelParams& params,
                     numeric::Tape* tape = nullptr);

// w-weighted mixture of per-expert softmax distributions over roles + END.
// A convex combination of distributions, so itself a distribution; START is
// never an output class.
numeric::Tensor predict_role(const numeric::Tensor& pool, const embed::TaskVector& z,
                             const numeric::Tensor& w, const numeric::ModelParams& params,
                             const MoeConfig& config, numeric::Tape* tape = nullptr);

// w-weighted mixture of per-expert sigmoid scores on [h_j || h_t || z];
// strictly inside (0, 1) for finite inputs.
numeric::Tensor predict_edge(const numeric::Tensor& h_source, const numeric::Tensor& h_candidate,
                             const embed::TaskVector& z, const numeric::Tensor& w,
                             const numeric::ModelParams& params, const MoeConfig& config,
                             numeric::Tape* tape = nullptr);

// Load-balancing penalty K_e * sum_k(mean_batch(w)_k^2): minimized at 1.0
// by uniform expert usage, maximized at K_e when one expert takes all mass.
numeric::Tensor balance_loss(std::span<const numeric::Tensor> gate_vectors,
                             numeric::Tape* tape = nullptr);

} // namespace ofamas::moe
