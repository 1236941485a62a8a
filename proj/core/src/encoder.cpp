#include "ofamas/encoder.hpp"

#include <cmath>
#include <string>

namespace ofamas::encoder {

using numeric::ModelParams;
using numeric::Rng;
using numeric::Tape;
using numeric::Tensor;

namespace {

std::string layer_key(int layer, const char* which) {
  return "enc.l" + std::to_string(layer) + "." + which;
}

// a^T x as a scalar tensor.
Tensor dot(const Tensor& a, const Tensor& x, Tape* tape) {
  return numeric::sum(numeric::hadamard(a, x, tape), tape);
}

} // namespace

void init_params(ModelParams& params, const EncoderConfig& config, Rng& rng) {
  if (config.layers < 1) throw ConfigError("encoder needs at least one layer");
  const int dh = config.hidden_dim;
  const int dz = config.task_dim;
  params.add("enc.W_in", numeric::glorot(dh, config.input_dim, rng));
  params.add("enc.b_in", Tensor::zeros({dh}));
  params.add("enc.start_context", Tensor::zeros({dh}));
  for (int l = 0; l < config.layers; ++l) {
    params.add(layer_key(l, "W_g"), numeric::glorot(dh, dh + dz, rng));
    params.add(layer_key(l, "W_m"), numeric::glorot(dh, dh, rng));
    params.add(layer_key(l, "W_k"), numeric::glorot(dh, dh, rng));
    params.add(layer_key(l, "W_q"), numeric::glorot(dh, dh, rng));
    const double bound = std::sqrt(6.0 / (2 * dh + 1));
    std::vector<double> a(static_cast<std::size_t>(2 * dh));
    for (double& v : a) v = rng.uniform(-bound, bound);
    params.add(layer_key(l, "a"), Tensor::vec(std::move(a)));
  }
}

Tensor init_node_state(const embed::RawEmbedding& role_embedding, const ModelParams& params,
                       Tape* tape) {
  const Tensor& w_in = params.at("enc.W_in");
  const Tensor& b_in = params.at("enc.b_in");
  if (w_in.cols() != static_cast<int>(role_embedding.values.size())) {
    throw ConfigError("input projection expects dimension " + std::to_string(w_in.cols()) +
                      ", role embedding has " + std::to_string(role_embedding.values.size()));
  }
  Tensor e = Tensor::vec(role_embedding.values);
  return numeric::add(numeric::matmul(w_in, e, tape), b_in, tape);
}

std::vector<Tensor> init_node_states(const graph::MasGraph& g,
                                     const std::vector<embed::RawEmbedding>& role_embeddings,
                                     const ModelParams& params, Tape* tape) {
  if (static_cast<int>(role_embeddings.size()) != g.node_count()) {
    throw ConfigError("role embedding count " + std::to_string(role_embeddings.size()) +
                      " does not match node count " + std::to_string(g.node_count()));
  }
  std::vector<Tensor> states;
  states.reserve(role_embeddings.size());
  for (const auto& e : role_embeddings) states.push_back(init_node_state(e, params, tape));
  return states;
}

EncodeResult encode(const graph::MasGraph& g, std::vector<Tensor> layer0,
                    const embed::TaskVector& z, const ModelParams& params,
                    const EncoderConfig& config, Tape* tape) {
  const int n = g.node_count();
  if (static_cast<int>(layer0.size()) != n) {
    throw ConfigError("layer-0 state count does not match node count");
  }
  if (z.values.size() != config.task_dim) {
    throw ConfigError("task vector has dimension " + std::to_string(z.values.size()) +
                      ", encoder expects " + std::to_string(config.task_dim));
  }

  // Neighborhoods are fixed across layers: information providers plus self.
  std::vector<std::vector<int>> neighborhoods(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    neighborhoods[static_cast<std::size_t>(v)] = g.in_neighbors(v);
    if (config.include_self_loop) neighborhoods[static_cast<std::size_t>(v)].push_back(v);
  }

  EncodeResult result;
  result.gates.by_layer.reserve(static_cast<std::size_t>(config.layers));
  std::vector<Tensor> states = std::move(layer0);

  for (int l = 0; l < config.layers; ++l) {
    const Tensor& w_g = params.at(layer_key(l, "W_g"));
    const Tensor& w_m = params.at(layer_key(l, "W_m"));
    const Tensor& w_k = params.at(layer_key(l, "W_k"));
    const Tensor& w_q = params.at(layer_key(l, "W_q"));
    const Tensor& attn = params.at(layer_key(l, "a"));

    std::vector<Tensor> gates, messages, keys;
    gates.reserve(static_cast<std::size_t>(n));
    messages.reserve(static_cast<std::size_t>(n));
    keys.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      const Tensor& h = states[static_cast<std::size_t>(v)];
      Tensor gate = numeric::sigmoid(
          numeric::matmul(w_g, numeric::concat(h, z.values, tape), tape), tape);
      Tensor message =
          numeric::hadamard(gate, numeric::relu(numeric::matmul(w_m, h, tape), tape), tape);
      gates.push_back(gate);
      messages.push_back(std::move(message));
      keys.push_back(numeric::matmul(w_k, h, tape));
    }

    std::vector<Tensor> next;
    next.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      const auto& neigh = neighborhoods[static_cast<std::size_t>(v)];
      Tensor aggregated;
      if (neigh.empty()) {
        // No providers and no self-loop: the aggregated message is zero.
        aggregated = Tensor::zeros({config.hidden_dim});
      } else {
        Tensor query = numeric::matmul(w_q, messages[static_cast<std::size_t>(v)], tape);
        std::vector<Tensor> logits;
        logits.reserve(neigh.size());
        for (int u : neigh) {
          Tensor pair = numeric::concat(keys[static_cast<std::size_t>(u)], query, tape);
          logits.push_back(numeric::leaky_relu(dot(attn, pair, tape), tape));
        }
        Tensor alpha = numeric::softmax(
            numeric::concat(std::span<const Tensor>(logits.data(), logits.size()), tape), tape);
        std::vector<Tensor> weighted;
        weighted.reserve(neigh.size());
        for (std::size_t i = 0; i < neigh.size(); ++i) {
          weighted.push_back(numeric::smul(messages[static_cast<std::size_t>(neigh[i])],
                                           numeric::pick(alpha, static_cast<int>(i), tape), tape));
        }
        aggregated =
            numeric::add_n(std::span<const Tensor>(weighted.data(), weighted.size()), tape);
      }
      next.push_back(numeric::affine(
          numeric::add(states[static_cast<std::size_t>(v)], aggregated, tape), 0.5, 0.0, tape));
    }
    result.gates.by_layer.push_back(std::move(gates));
    states = std::move(next);
  }
  result.states = std::move(states);
  return result;
}

Tensor gate_l1(const GateActivations& gates, Tape* tape) {
  const int total = gates.total_entries();
  if (total == 0) throw ContractError("gate_l1 on empty activations");
  std::vector<Tensor> norms;
  for (const auto& layer : gates.by_layer) {
    for (const auto& g : layer) norms.push_back(numeric::l1_norm(g, tape));
  }
  Tensor summed = norms.size() == 1
                      ? norms.front()
                      : numeric::add_n(std::span<const Tensor>(norms.data(), norms.size()), tape);
  return numeric::affine(summed, 1.0 / total, 0.0, tape);
}

Tensor global_pool(std::span<const Tensor> states, const ModelParams& params, Tape* tape) {
  if (states.empty()) return params.at("enc.start_context");
  if (states.size() == 1) return states[0];
  Tensor total = numeric::add_n(states, tape);
  return numeric::affine(total, 1.0 / static_cast<double>(states.size()), 0.0, tape);
}

} // namespace ofamas::encoder
