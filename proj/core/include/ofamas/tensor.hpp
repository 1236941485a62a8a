#pragma once

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ofamas/errors.hpp"

namespace ofamas::numeric {

class Tape;

namespace detail {

struct TensorImpl {
  std::vector<int> shape;
  std::vector<double> value;
  std::vector<double> grad; // sized and zeroed by Tape::backward
  bool requires_grad = false;
  std::string name;            // non-empty only for named parameters
  const Tape* creator = nullptr; // tape that recorded the producing op
};

} // namespace detail

// Dense real tensor with value semantics. The stored values are immutable
// after construction; "updates" (optimizer steps, checkpoint loads) replace
// the whole tensor. Supports 1-D and 2-D shapes; scalars use shape {1}.
class Tensor {
public:
  Tensor() = default;

  static Tensor scalar(double v);
  static Tensor zeros(const std::vector<int>& shape);
  static Tensor full(const std::vector<int>& shape, double v);
  static Tensor of(const std::vector<int>& shape, std::vector<double> data);
  static Tensor vec(std::vector<double> data);

  bool defined() const { return impl_ != nullptr; }
  const std::vector<int>& shape() const { return impl_->shape; }
  int dims() const { return static_cast<int>(impl_->shape.size()); }
  int size() const { return static_cast<int>(impl_->value.size()); }
  int rows() const;
  int cols() const;
  bool is_scalar() const { return impl_ && impl_->value.size() == 1; }

  std::span<const double> data() const { return impl_->value; }
  double operator[](int i) const { return impl_->value[static_cast<std::size_t>(i)]; }
  double at(int r, int c) const;
  double value() const; // scalar extraction; ContractError otherwise

  bool requires_grad() const { return impl_ && impl_->requires_grad; }
  const std::string& name() const { return impl_->name; }

  // Used by ModelParams to register a tensor as a named trainable leaf.
  void mark_parameter(const std::string& name);

  std::shared_ptr<detail::TensorImpl> impl() const { return impl_; }

private:
  explicit Tensor(std::shared_ptr<detail::TensorImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<detail::TensorImpl> impl_;
};

using GradMap = std::map<std::string, Tensor>;

struct BackwardOutcome {
  GradMap gradients;          // named parameter -> total derivative
  bool detached_loss = false; // loss was not produced by this tape
};

// Wengert-list gradient tape. Ops append one backward record each in
// execution order; backward() replays them strictly in reverse and returns
// the accumulated gradients of every named parameter that participated in
// the forward pass. A parameter never touched by the tape has gradient zero
// and is simply absent from the map. The tape is single-use: backward()
// consumes it.
class Tape {
public:
  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  BackwardOutcome backward(const Tensor& loss);

  std::size_t num_records() const { return records_.size(); }
  bool consumed() const { return consumed_; }

  // Op-implementation hook: registers the backward closure for one op and
  // marks the output as gradient-carrying. Not intended for user code.
  void register_op(std::function<void()> backward_fn,
                   std::span<const Tensor* const> inputs, const Tensor& output);

private:
  std::vector<std::function<void()>> records_;
  std::vector<std::shared_ptr<detail::TensorImpl>> touched_;
  std::map<std::string, std::shared_ptr<detail::TensorImpl>> leaves_;
  bool consumed_ = false;
};

// Differentiable operation set. Each op validates shapes, computes the
// forward value, checks the result for NaN/Inf, and (when a tape is given
// and any input carries gradients) registers its backward rule.

Tensor matmul(const Tensor& a, const Tensor& b, Tape* tape = nullptr);
Tensor add(const Tensor& a, const Tensor& b, Tape* tape = nullptr);
Tensor sub(const Tensor& a, const Tensor& b, Tape* tape = nullptr);
Tensor add_n(std::span<const Tensor> terms, Tape* tape = nullptr);
Tensor hadamard(const Tensor& a, const Tensor& b, Tape* tape = nullptr);

// Elementwise alpha*x + beta with constant coefficients.
Tensor affine(const Tensor& x, double alpha, double beta, Tape* tape = nullptr);
// Tensor times scalar tensor (gradients flow to both).
Tensor smul(const Tensor& x, const Tensor& s, Tape* tape = nullptr);
// Tensor divided by scalar tensor.
Tensor sdiv(const Tensor& x, const Tensor& s, Tape* tape = nullptr);

Tensor concat(std::span<const Tensor> parts, Tape* tape = nullptr);
Tensor concat(const Tensor& a, const Tensor& b, Tape* tape = nullptr);
// Single element as a scalar tensor.
Tensor pick(const Tensor& v, int index, Tape* tape = nullptr);

Tensor sigmoid(const Tensor& x, Tape* tape = nullptr);
Tensor relu(const Tensor& x, Tape* tape = nullptr);
inline constexpr double kLeakyReluSlope = 0.01;
Tensor leaky_relu(const Tensor& x, Tape* tape = nullptr);
Tensor softmax(const Tensor& v, Tape* tape = nullptr);
Tensor log(const Tensor& x, Tape* tape = nullptr);
Tensor clamp(const Tensor& x, double lo, double hi, Tape* tape = nullptr);

Tensor sum(const Tensor& x, Tape* tape = nullptr);
Tensor mean(const Tensor& x, Tape* tape = nullptr);
Tensor mean_pool_rows(const Tensor& m, Tape* tape = nullptr);
Tensor l1_norm(const Tensor& x, Tape* tape = nullptr);

} // namespace ofamas::numeric
