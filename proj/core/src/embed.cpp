#include "ofamas/embed.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>

#include "http_util.hpp"

namespace ofamas::embed {

namespace {

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  for (unsigned char c : text) {
    if (std::isalnum(c)) {
      current.push_back(static_cast<char>(std::tolower(c)));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

} // namespace

HashEmbedder::HashEmbedder(int dim) : dim_(dim) {
  if (dim <= 0) throw ConfigError("embedding dimension must be positive");
}

RawEmbedding HashEmbedder::embed(const std::string& text) {
  if (text.empty()) throw InputError("cannot embed empty text");
  const std::vector<std::string> tokens = tokenize(text);
  if (tokens.empty()) {
    throw InputError("text contains no alphanumeric tokens: '" + text + "'");
  }
  std::vector<double> values(static_cast<std::size_t>(dim_), 0.0);
  for (const std::string& token : tokens) {
    const std::uint64_t h = fnv1a64(token);
    const auto bucket = static_cast<std::size_t>(h % static_cast<std::uint64_t>(dim_));
    const double sign = ((h >> 32) & 1ULL) ? 1.0 : -1.0;
    values[bucket] += sign;
  }
  double norm_sq = 0.0;
  for (double v : values) norm_sq += v * v;
  // Signed contributions can cancel within a bucket; reject the degenerate
  // all-cancelled case rather than emit a zero vector.
  if (norm_sq == 0.0) {
    throw InputError("hash embedding collapsed to zero for: '" + text + "'");
  }
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (double& v : values) v *= inv;
  return RawEmbedding{std::move(values), "hash-fallback"};
}

HttpEmbedder::HttpEmbedder(HttpEmbedderConfig config) : config_(std::move(config)) {
  if (config_.endpoint.empty()) throw ConfigError("embedding endpoint is not configured");
  if (config_.dim <= 0) throw ConfigError("embedding dimension must be positive");
}

RawEmbedding HttpEmbedder::embed(const std::string& text) {
  if (text.empty()) throw InputError("cannot embed empty text");
  nlohmann::json body;
  body["input"] = nlohmann::json::array({text});
  body["dim"] = config_.dim;
  nlohmann::json reply = detail::post_json(config_.endpoint, config_.path, body,
                                           config_.auth_token, config_.timeout_seconds);
  if (!reply.contains("embeddings") || !reply["embeddings"].is_array() ||
      reply["embeddings"].empty() || !reply["embeddings"][0].is_array()) {
    throw TransportError("embedding service reply is missing the embeddings array");
  }
  std::vector<double> values;
  for (const auto& v : reply["embeddings"][0]) {
    if (!v.is_number()) throw TransportError("embedding service returned non-numeric values");
    values.push_back(v.get<double>());
  }
  if (static_cast<int>(values.size()) != config_.dim) {
    throw TransportError("embedding service returned dimension " +
                         std::to_string(values.size()) + ", expected " +
                         std::to_string(config_.dim));
  }
  return RawEmbedding{std::move(values), "external-provider"};
}

CachingEmbedder::CachingEmbedder(std::shared_ptr<EmbeddingProvider> inner)
    : inner_(std::move(inner)) {
  if (!inner_) throw ConfigError("caching embedder needs an inner provider");
}

RawEmbedding CachingEmbedder::embed(const std::string& text) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(text);
    if (it != cache_.end()) return it->second;
  }
  RawEmbedding fresh = inner_->embed(text);
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, _] = cache_.emplace(text, std::move(fresh));
  return it->second;
}

std::size_t CachingEmbedder::cache_size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.size();
}

TaskVector zero_task_vector(int d_task) {
  if (d_task <= 0) throw ConfigError("task vector dimension must be positive");
  return TaskVector{numeric::Tensor::zeros({d_task})};
}

TaskVector encode_task(const RawEmbedding& e, const numeric::ModelParams& params,
                       numeric::Tape* tape) {
  using numeric::Tensor;
  const Tensor& w1 = params.at("task.W1");
  const Tensor& b1 = params.at("task.b1");
  const Tensor& w2 = params.at("task.W2");
  const Tensor& b2 = params.at("task.b2");
  if (w1.cols() != static_cast<int>(e.values.size())) {
    throw ConfigError("task encoder expects input dimension " + std::to_string(w1.cols()) +
                      ", embedding has " + std::to_string(e.values.size()));
  }
  if (w1.rows() != b1.size() || w2.cols() != w1.rows() || w2.rows() != b2.size()) {
    throw ConfigError("task encoder parameter shapes are inconsistent");
  }
  Tensor input = Tensor::vec(e.values);
  Tensor hidden = numeric::relu(numeric::add(numeric::matmul(w1, input, tape), b1, tape), tape);
  Tensor z = numeric::add(numeric::matmul(w2, hidden, tape), b2, tape);
  return TaskVector{std::move(z)};
}

} // namespace ofamas::embed
