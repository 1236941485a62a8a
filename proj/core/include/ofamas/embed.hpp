#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ofamas/params.hpp"
#include "ofamas/tensor.hpp"

namespace ofamas::embed {

inline constexpr int kDefaultEmbeddingDim = 384;

struct RawEmbedding {
  std::vector<double> values;
  std::string source; // "hash-fallback" | "external-provider"
};

class EmbeddingProvider {
public:
  virtual ~EmbeddingProvider() = default;
  virtual RawEmbedding embed(const std::string& text) = 0;
  virtual int dimension() const = 0;
};

// Deterministic offline embedder. Text is lowercased and split on
// non-alphanumeric characters; each token is FNV-1a hashed to one of `dim`
// buckets with a +/-1 sign drawn from the same hash, contributions are
// accumulated and the result is L2-normalized. A pure function of the input
// string.
class HashEmbedder : public EmbeddingProvider {
public:
  explicit HashEmbedder(int dim = kDefaultEmbeddingDim);
  RawEmbedding embed(const std::string& text) override;
  int dimension() const override { return dim_; }

private:
  int dim_;
};

struct HttpEmbedderConfig {
  std::string endpoint; // scheme://host[:port]
  std::string path = "/embed";
  std::string auth_token; // sent as a Bearer header when non-empty
  int dim = kDefaultEmbeddingDim;
  int timeout_seconds = 30;
};

// Client for an external embedding service. POSTs
// {"input": [text], "dim": n} and expects {"embeddings": [[...]]}; the
// service vector is returned verbatim (no re-normalization).
class HttpEmbedder : public EmbeddingProvider {
public:
  explicit HttpEmbedder(HttpEmbedderConfig config);
  RawEmbedding embed(const std::string& text) override;
  int dimension() const override { return config_.dim; }

private:
  HttpEmbedderConfig config_;
};

// Memoizes an inner provider per exact input string. Cache access is
// serialized; safe to share across concurrent read-only inference calls.
class CachingEmbedder : public EmbeddingProvider {
public:
  explicit CachingEmbedder(std::shared_ptr<EmbeddingProvider> inner);
  RawEmbedding embed(const std::string& text) override;
  int dimension() const override { return inner_->dimension(); }
  std::size_t cache_size() const;

private:
  std::shared_ptr<EmbeddingProvider> inner_;
  mutable std::mutex mutex_;
  std::map<std::string, RawEmbedding> cache_;
};

// The conditioning vector z derived from a query embedding.
struct TaskVector {
  numeric::Tensor values; // shape [d_task]
};

TaskVector zero_task_vector(int d_task);

// z = W2 * ReLU(W1 * e + b1) + b2 over the named parameters task.W1,
// task.b1, task.W2, task.b2. Participates in the tape during training.
TaskVector encode_task(const RawEmbedding& e, const numeric::ModelParams& params,
                       numeric::Tape* tape = nullptr);

} // namespace ofamas::embed
