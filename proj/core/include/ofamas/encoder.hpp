#pragma once

#include <span>
#include <vector>

#include "ofamas/embed.hpp"
#include "ofamas/graph.hpp"
#include "ofamas/params.hpp"
#include "ofamas/rng.hpp"
#include "ofamas/tensor.hpp"

namespace ofamas::encoder {

struct EncoderConfig {
  int layers = 4;     // message-passing depth L
  int hidden_dim = 256; // d_h
  int input_dim = 384;  // raw role-embedding dimension
  int task_dim = 128;   // d_task
  bool include_self_loop = true;
};

// Per-layer, per-node gate vectors retained for the L1 regularizer.
struct GateActivations {
  std::vector<std::vector<numeric::Tensor>> by_layer;

  int total_entries() const {
    int n = 0;
    for (const auto& layer : by_layer) {
      for (const auto& g : layer) n += g.size();
    }
    return n;
  }
};

struct EncodeResult {
  std::vector<numeric::Tensor> states; // final-layer state per node, each [d_h]
  GateActivations gates;
};

// Registers enc.* parameters: the shared input projection, the learned
// start-context vector, and per-layer gate/message/attention weights.
void init_params(numeric::ModelParams& params, const EncoderConfig& config, numeric::Rng& rng);

// h_v(0) = W_in * embedding + b_in; one learned projection shared by all roles.
numeric::Tensor init_node_state(const embed::RawEmbedding& role_embedding,
                                const numeric::ModelParams& params,
                                numeric::Tape* tape = nullptr);

// Layer-0 states for every node of the graph; role_embeddings is indexed by
// node position.
std::vector<numeric::Tensor> init_node_states(const graph::MasGraph& g,
                                              const std::vector<embed::RawEmbedding>& role_embeddings,
                                              const numeric::ModelParams& params,
                                              numeric::Tape* tape = nullptr);

// Context-gated message passing with role-aware attention and residual
// halving, conditioned on the task vector at every layer. Neighborhoods are
// a node's in-neighbors plus (configurably) itself.
EncodeResult encode(const graph::MasGraph& g, std::vector<numeric::Tensor> layer0,
                    const embed::TaskVector& z, const numeric::ModelParams& params,
                    const EncoderConfig& config, numeric::Tape* tape = nullptr);

// Mean absolute gate activation across all layers, nodes and channels.
numeric::Tensor gate_l1(const GateActivations& gates, numeric::Tape* tape = nullptr);

// Arithmetic mean of node states; the empty graph yields the learned
// start-context parameter verbatim.
numeric::Tensor global_pool(std::span<const numeric::Tensor> states,
                            const numeric::ModelParams& params, numeric::Tape* tape = nullptr);

} // namespace ofamas::encoder
