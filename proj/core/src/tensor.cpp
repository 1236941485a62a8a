#include "ofamas/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace ofamas::numeric {

namespace {

std::string shape_str(const std::vector<int>& s) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << "x";
    os << s[i];
  }
  os << "]";
  return os.str();
}

int shape_numel(const std::vector<int>& shape) {
  int n = 1;
  for (int e : shape) {
    if (e <= 0) throw DimensionError("tensor extent must be positive, got " + shape_str(shape));
    n *= e;
  }
  return n;
}

std::shared_ptr<detail::TensorImpl> make_impl(std::vector<int> shape,
                                              std::vector<double> data) {
  if (shape.empty()) throw DimensionError("tensor shape must have at least one extent");
  if (shape.size() > 2) throw DimensionError("only 1-D and 2-D tensors are supported, got " + shape_str(shape));
  const int n = shape_numel(shape);
  if (static_cast<std::size_t>(n) != data.size()) {
    throw DimensionError("shape " + shape_str(shape) + " holds " + std::to_string(n) +
                         " values but " + std::to_string(data.size()) + " were given");
  }
  auto impl = std::make_shared<detail::TensorImpl>();
  impl->shape = std::move(shape);
  impl->value = std::move(data);
  return impl;
}

void check_finite(const detail::TensorImpl& impl, const char* op) {
  for (double v : impl.value) {
    if (!std::isfinite(v)) {
      throw NumericError(std::string(op) + " produced a non-finite value");
    }
  }
}

void require_same_shape(const Tensor& a, const Tensor& b, const char* op) {
  if (a.shape() != b.shape()) {
    throw DimensionError(std::string(op) + ": shapes " + shape_str(a.shape()) + " and " +
                         shape_str(b.shape()) + " differ");
  }
}

} // namespace

// -- Tensor ------------------------------------------------------------

Tensor Tensor::scalar(double v) { return of({1}, {v}); }

Tensor Tensor::zeros(const std::vector<int>& shape) {
  return of(shape, std::vector<double>(static_cast<std::size_t>(shape_numel(shape)), 0.0));
}

Tensor Tensor::full(const std::vector<int>& shape, double v) {
  return of(shape, std::vector<double>(static_cast<std::size_t>(shape_numel(shape)), v));
}

Tensor Tensor::of(const std::vector<int>& shape, std::vector<double> data) {
  return Tensor(make_impl(shape, std::move(data)));
}

Tensor Tensor::vec(std::vector<double> data) {
  const int n = static_cast<int>(data.size());
  return of({n}, std::move(data));
}

int Tensor::rows() const {
  return impl_->shape[0];
}

int Tensor::cols() const {
  if (dims() != 2) throw DimensionError("cols() requires a 2-D tensor, got " + shape_str(impl_->shape));
  return impl_->shape[1];
}

double Tensor::at(int r, int c) const {
  if (dims() != 2) throw DimensionError("at(r,c) requires a 2-D tensor");
  return impl_->value[static_cast<std::size_t>(r) * impl_->shape[1] + c];
}

double Tensor::value() const {
  if (!is_scalar()) throw ContractError("value() requires a scalar tensor, got " + shape_str(impl_->shape));
  return impl_->value[0];
}

void Tensor::mark_parameter(const std::string& name) {
  if (!impl_) throw ContractError("cannot name an empty tensor");
  impl_->name = name;
  impl_->requires_grad = true;
}

// -- Tape --------------------------------------------------------------

void Tape::register_op(std::function<void()> backward_fn,
                       std::span<const Tensor* const> inputs, const Tensor& output) {
  if (consumed_) throw ContractError("gradient tape already consumed by backward()");
  auto out_impl = output.impl();
  out_impl->requires_grad = true;
  out_impl->creator = this;
  touched_.push_back(out_impl);
  for (const Tensor* in : inputs) {
    auto impl = in->impl();
    touched_.push_back(impl);
    if (impl->requires_grad && impl->creator == nullptr && !impl->name.empty()) {
      leaves_.emplace(impl->name, impl);
    }
  }
  records_.push_back(std::move(backward_fn));
}

BackwardOutcome Tape::backward(const Tensor& loss) {
  if (consumed_) throw ContractError("gradient tape already consumed by backward()");
  if (!loss.defined() || !loss.is_scalar()) {
    throw ContractError("backward() requires a scalar loss");
  }
  BackwardOutcome out;
  if (loss.impl()->creator != this) {
    // Loss was not produced by ops recorded on this tape.
    out.detached_loss = true;
    consumed_ = true;
    records_.clear();
    return out;
  }
  for (auto& impl : touched_) {
    impl->grad.assign(impl->value.size(), 0.0);
  }
  loss.impl()->grad[0] = 1.0;
  for (auto it = records_.rbegin(); it != records_.rend(); ++it) {
    (*it)();
  }
  for (auto& [name, impl] : leaves_) {
    Tensor g = Tensor::of(impl->shape, impl->grad);
    out.gradients.emplace(name, std::move(g));
  }
  consumed_ = true;
  records_.clear();
  return out;
}

// -- op helpers ----------------------------------------------------------

namespace {

Tensor make_result(std::vector<int> shape, std::vector<double> data, const char* op) {
  Tensor t = Tensor::of(std::move(shape), std::move(data));
  check_finite(*t.impl(), op);
  return t;
}

bool wants_grad(Tape* tape, std::initializer_list<const Tensor*> inputs) {
  if (!tape) return false;
  for (const Tensor* t : inputs) {
    if (t->requires_grad()) return true;
  }
  return false;
}

void record(Tape* tape, std::initializer_list<const Tensor*> inputs, const Tensor& output,
            std::function<void()> fn) {
  std::vector<const Tensor*> ins(inputs);
  tape->register_op(std::move(fn), std::span<const Tensor* const>(ins.data(), ins.size()), output);
}

using Impl = std::shared_ptr<detail::TensorImpl>;

} // namespace

// -- ops -----------------------------------------------------------------

Tensor matmul(const Tensor& a, const Tensor& b, Tape* tape) {
  if (a.dims() != 2) {
    throw DimensionError("matmul: left operand must be 2-D, got " + shape_str(a.shape()));
  }
  const int m = a.shape()[0];
  const int k = a.shape()[1];
  const bool vec_rhs = b.dims() == 1;
  const int bk = b.shape()[0];
  const int n = vec_rhs ? 1 : b.shape()[1];
  if (bk != k) {
    throw DimensionError("matmul: inner extents differ, " + shape_str(a.shape()) + " vs " +
                         shape_str(b.shape()));
  }
  std::vector<double> out(static_cast<std::size_t>(m) * n, 0.0);
  const auto av = a.data();
  const auto bv = b.data();
  for (int i = 0; i < m; ++i) {
    for (int p = 0; p < k; ++p) {
      const double aip = av[static_cast<std::size_t>(i) * k + p];
      if (aip == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        out[static_cast<std::size_t>(i) * n + j] += aip * bv[static_cast<std::size_t>(p) * n + j];
      }
    }
  }
  Tensor result = vec_rhs ? make_result({m}, std::move(out), "matmul")
                          : make_result({m, n}, std::move(out), "matmul");
  if (wants_grad(tape, {&a, &b})) {
    Impl ai = a.impl(), bi = b.impl(), oi = result.impl();
    record(tape, {&a, &b}, result, [ai, bi, oi, m, k, n]() {
      if (ai->requires_grad) {
        for (int i = 0; i < m; ++i) {
          for (int p = 0; p < k; ++p) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j) {
              acc += oi->grad[static_cast<std::size_t>(i) * n + j] *
                     bi->value[static_cast<std::size_t>(p) * n + j];
            }
            ai->grad[static_cast<std::size_t>(i) * k + p] += acc;
          }
        }
      }
      if (bi->requires_grad) {
        for (int p = 0; p < k; ++p) {
          for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int i = 0; i < m; ++i) {
              acc += ai->value[static_cast<std::size_t>(i) * k + p] *
                     oi->grad[static_cast<std::size_t>(i) * n + j];
            }
            bi->grad[static_cast<std::size_t>(p) * n + j] += acc;
          }
        }
      }
    });
  }
  return result;
}

Tensor add(const Tensor& a, const Tensor& b, Tape* tape) {
  require_same_shape(a, b, "add");
  std::vector<double> out(a.data().begin(), a.data().end());
  for (int i = 0; i < b.size(); ++i) out[static_cast<std::size_t>(i)] += b[i];
  Tensor result = make_result(a.shape(), std::move(out), "add");
  if (wants_grad(tape, {&a, &b})) {
    Impl ai = a.impl(), bi = b.impl(), oi = result.impl();
    record(tape, {&a, &b}, result, [ai, bi, oi]() {
      if (ai->requires_grad)
        for (std::size_t i = 0; i < oi->grad.size(); ++i) ai->grad[i] += oi->grad[i];
      if (bi->requires_grad)
        for (std::size_t i = 0; i < oi->grad.size(); ++i) bi->grad[i] += oi->grad[i];
    });
  }
  return result;
}

Tensor sub(const Tensor& a, const Tensor& b, Tape* tape) {
  require_same_shape(a, b, "sub");
  std::vector<double> out(a.data().begin(), a.data().end());
  for (int i = 0; i < b.size(); ++i) out[static_cast<std::size_t>(i)] -= b[i];
  Tensor result = make_result(a.shape(), std::move(out), "sub");
  if (wants_grad(tape, {&a, &b})) {
    Impl ai = a.impl(), bi = b.impl(), oi = result.impl();
    record(tape, {&a, &b}, result, [ai, bi, oi]() {
      if (ai->requires_grad)
        for (std::size_t i = 0; i < oi->grad.size(); ++i) ai->grad[i] += oi->grad[i];
      if (bi->requires_grad)
        for (std::size_t i = 0; i < oi->grad.size(); ++i) bi->grad[i] -= oi->grad[i];
    });
  }
  return result;
}

Tensor add_n(std::span<const Tensor> terms, Tape* tape) {
  if (terms.empty()) throw DimensionError("add_n: empty term list");
  std::vector<double> out(terms[0].data().begin(), terms[0].data().end());
  for (std::size_t t = 1; t < terms.size(); ++t) {
    require_same_shape(terms[0], terms[t], "add_n");
    for (int i = 0; i < terms[t].size(); ++i) out[static_cast<std::size_t>(i)] += terms[t][i];
  }
  Tensor result = make_result(terms[0].shape(), std::move(out), "add_n");
  bool any_grad = false;
  for (const Tensor& t : terms) any_grad = any_grad || t.requires_grad();
  if (tape && any_grad) {
    std::vector<Impl> impls;
    impls.reserve(terms.size());
    std::vector<const Tensor*> ins;
    ins.reserve(terms.size());
    for (const Tensor& t : terms) {
      impls.push_back(t.impl());
      ins.push_back(&t);
    }
    Impl oi = result.impl();
    tape->register_op(
        [impls = std::move(impls), oi]() {
          for (const Impl& impl : impls) {
            if (!impl->requires_grad) continue;
            for (std::size_t i = 0; i < oi->grad.size(); ++i) impl->grad[i] += oi->grad[i];
          }
        },
        std::span<const Tensor* const>(ins.data(), ins.size()), result);
  }
  return result;
}

Tensor hadamard(const Tensor& a, const Tensor& b, Tape* tape) {
  require_same_shape(a, b, "hadamard");
  std::vector<double> out(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(i)] = a[i] * b[i];
  Tensor result = make_result(a.shape(), std::move(out), "hadamard");
  if (wants_grad(tape, {&a, &b})) {
    Impl ai = a.impl(), bi = b.impl(), oi = result.impl();
    record(tape, {&a, &b}, result, [ai, bi, oi]() {
      for (std::size_t i = 0; i < oi->grad.size(); ++i) {
        if (ai->requires_grad) ai->grad[i] += oi->grad[i] * bi->value[i];
        if (bi->requires_grad) bi->grad[i] += oi->grad[i] * ai->value[i];
      }
    });
  }
  return result;
}

Tensor affine(const Tensor& x, double alpha, double beta, Tape* tape) {
  std::vector<double> out(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) out[static_cast<std::size_t>(i)] = alpha * x[i] + beta;
  Tensor result = make_result(x.shape(), std::move(out), "affine");
  if (wants_grad(tape, {&x})) {
    Impl xi = x.impl(), oi = result.impl();
    record(tape, {&x}, result, [xi, oi, alpha]() {
      for (std::size_t i = 0; i < oi->grad.size(); ++i) xi->grad[i] += alpha * oi->grad[i];
    });
  }
  return result;
}

Tensor smul(const Tensor& x, const Tensor& s, Tape* tape) {
  if (!s.is_scalar()) throw DimensionError("smul: scale must be a scalar tensor");
  const double sv = s.value();
  std::vector<double> out(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) out[static_cast<std::size_t>(i)] = x[i] * sv;
  Tensor result = make_result(x.shape(), std::move(out), "smul");
  if (wants_grad(tape, {&x, &s})) {
    Impl xi = x.impl(), si = s.impl(), oi = result.impl();
    record(tape, {&x, &s}, result, [xi, si, oi]() {
      const double sval = si->value[0];
      for (std::size_t i = 0; i < oi->grad.size(); ++i) {
        if (xi->requires_grad) xi->grad[i] += oi->grad[i] * sval;
        if (si->requires_grad) si->grad[0] += oi->grad[i] * xi->value[i];
      }
    });
  }
  return result;
}

Tensor sdiv(const Tensor& x, const Tensor& s, Tape* tape) {
  if (!s.is_scalar()) throw DimensionError("sdiv: divisor must be a scalar tensor");
  const double sv = s.value();
  std::vector<double> out(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) out[static_cast<std::size_t>(i)] = x[i] / sv;
  Tensor result = make_result(x.shape(), std::move(out), "sdiv");
  if (wants_grad(tape, {&x, &s})) {
    Impl xi = x.impl(), si = s.impl(), oi = result.impl();
    record(tape, {&x, &s}, result, [xi, si, oi]() {
      const double sval = si->value[0];
      for (std::size_t i = 0; i < oi->grad.size(); ++i) {
        if (xi->requires_grad) xi->grad[i] += oi->grad[i] / sval;
        if (si->requires_grad) si->grad[0] -= oi->grad[i] * xi->value[i] / (sval * sval);
      }
    });
  }
  return result;
}

Tensor concat(std::span<const Tensor> parts, Tape* tape) {
  if (parts.empty()) throw DimensionError("concat: empty part list");
  std::vector<double> out;
  for (const Tensor& p : parts) {
    if (p.dims() != 1) throw DimensionError("concat: parts must be 1-D, got " + shape_str(p.shape()));
    out.insert(out.end(), p.data().begin(), p.data().end());
  }
  const int total = static_cast<int>(out.size());
  Tensor result = make_result({total}, std::move(out), "concat");
  bool any_grad = false;
  for (const Tensor& p : parts) any_grad = any_grad || p.requires_grad();
  if (tape && any_grad) {
    std::vector<Impl> impls;
    std::vector<const Tensor*> ins;
    for (const Tensor& p : parts) {
      impls.push_back(p.impl());
      ins.push_back(&p);
    }
    Impl oi = result.impl();
    tape->register_op(
        [impls = std::move(impls), oi]() {
          std::size_t off = 0;
          for (const Impl& impl : impls) {
            if (impl->requires_grad) {
              for (std::size_t i = 0; i < impl->value.size(); ++i) {
                impl->grad[i] += oi->grad[off + i];
              }
            }
            off += impl->value.size();
          }
        },
        std::span<const Tensor* const>(ins.data(), ins.size()), result);
  }
  return result;
}

Tensor concat(const Tensor& a, const Tensor& b, Tape* tape) {
  const Tensor parts[] = {a, b};
  return concat(std::span<const Tensor>(parts, 2), tape);
}

Tensor pick(const Tensor& v, int index, Tape* tape) {
  if (index < 0 || index >= v.size()) {
    throw DimensionError("pick: index " + std::to_string(index) + " out of range for " +
                         shape_str(v.shape()));
  }
  Tensor result = make_result({1}, {v[index]}, "pick");
  if (wants_grad(tape, {&v})) {
    Impl vi = v.impl(), oi = result.impl();
    record(tape, {&v}, result, [vi, oi, index]() {
      vi->grad[static_cast<std::size_t>(index)] += oi->grad[0];
    });
  }
  return result;
}

Tensor sigmoid(const Tensor& x, Tape* tape) {
  std::vector<double> out(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) {
    const double v = x[i];
    out[static_cast<std::size_t>(i)] = v >= 0.0 ? 1.0 / (1.0 + std::exp(-v))
                                                : std::exp(v) / (1.0 + std::exp(v));
  }
  Tensor result = make_result(x.shape(), std::move(out), "sigmoid");
  if (wants_grad(tape, {&x})) {
    Impl xi = x.impl(), oi = result.impl();
    record(tape, {&x}, result, [xi, oi]() {
      for (std::size_t i = 0; i < oi->grad.size(); ++i) {
        const double y = oi->value[i];
        xi->grad[i] += oi->grad[i] * y * (1.0 - y);
      }
    });
  }
  return result;
}

Tensor relu(const Tensor& x, Tape* tape) {
  std::vector<double> out(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) out[static_cast<std::size_t>(i)] = x[i] > 0.0 ? x[i] : 0.0;
  Tensor result = make_result(x.shape(), std::move(out), "relu");
  if (wants_grad(tape, {&x})) {
    Impl xi = x.impl(), oi = result.impl();
    record(tape, {&x}, result, [xi, oi]() {
      for (std::size_t i = 0; i < oi->grad.size(); ++i) {
        if (xi->value[i] > 0.0) xi->grad[i] += oi->grad[i];
      }
    });
  }
  return result;
}

Tensor leaky_relu(const Tensor& x, Tape* tape) {
  std::vector<double> out(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) {
    out[static_cast<std::size_t>(i)] = x[i] > 0.0 ? x[i] : kLeakyReluSlope * x[i];
  }
  Tensor result = make_result(x.shape(), std::move(out), "leaky_relu");
  if (wants_grad(tape, {&x})) {
    Impl xi = x.impl(), oi = result.impl();
    record(tape, {&x}, result, [xi, oi]() {
      for (std::size_t i = 0; i < oi->grad.size(); ++i) {
        xi->grad[i] += oi->grad[i] * (xi->value[i] > 0.0 ? 1.0 : kLeakyReluSlope);
      }
    });
  }
  return result;
}

Tensor softmax(const Tensor& v, Tape* tape) {
  if (v.dims() != 1 || v.size() < 1) {
    throw DimensionError("softmax: requires a non-empty 1-D tensor, got " + shape_str(v.shape()));
  }
  const double mx = *std::max_element(v.data().begin(), v.data().end());
  std::vector<double> out(static_cast<std::size_t>(v.size()));
  double denom = 0.0;
  for (int i = 0; i < v.size(); ++i) {
    out[static_cast<std::size_t>(i)] = std::exp(v[i] - mx);
    denom += out[static_cast<std::size_t>(i)];
  }
  for (double& o : out) o /= denom;
  Tensor result = make_result(v.shape(), std::move(out), "softmax");
  if (wants_grad(tape, {&v})) {
    Impl vi = v.impl(), oi = result.impl();
    record(tape, {&v}, result, [vi, oi]() {
      double dot = 0.0;
      for (std::size_t i = 0; i < oi->grad.size(); ++i) dot += oi->grad[i] * oi->value[i];
      for (std::size_t i = 0; i < oi->grad.size(); ++i) {
        vi->grad[i] += oi->value[i] * (oi->grad[i] - dot);
      }
    });
  }
  return result;
}

Tensor log(const Tensor& x, Tape* tape) {
  std::vector<double> out(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) {
    if (x[i] <= 0.0) throw NumericError("log: non-positive input " + std::to_string(x[i]));
    out[static_cast<std::size_t>(i)] = std::log(x[i]);
  }
  Tensor result = make_result(x.shape(), std::move(out), "log");
  if (wants_grad(tape, {&x})) {
    Impl xi = x.impl(), oi = result.impl();
    record(tape, {&x}, result, [xi, oi]() {
      for (std::size_t i = 0; i < oi->grad.size(); ++i) xi->grad[i] += oi->grad[i] / xi->value[i];
    });
  }
  return result;
}

Tensor clamp(const Tensor& x, double lo, double hi, Tape* tape) {
  if (lo > hi) throw ContractError("clamp: lo > hi");
  std::vector<double> out(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) out[static_cast<std::size_t>(i)] = std::clamp(x[i], lo, hi);
  Tensor result = make_result(x.shape(), std::move(out), "clamp");
  if (wants_grad(tape, {&x})) {
    Impl xi = x.impl(), oi = result.impl();
    record(tape, {&x}, result, [xi, oi, lo, hi]() {
      for (std::size_t i = 0; i < oi->grad.size(); ++i) {
        if (xi->value[i] >= lo && xi->value[i] <= hi) xi->grad[i] += oi->grad[i];
      }
    });
  }
  return result;
}

Tensor sum(const Tensor& x, Tape* tape) {
  double acc = 0.0;
  for (int i = 0; i < x.size(); ++i) acc += x[i];
  Tensor result = make_result({1}, {acc}, "sum");
  if (wants_grad(tape, {&x})) {
    Impl xi = x.impl(), oi = result.impl();
    record(tape, {&x}, result, [xi, oi]() {
      for (std::size_t i = 0; i < xi->grad.size(); ++i) xi->grad[i] += oi->grad[0];
    });
  }
  return result;
}

Tensor mean(const Tensor& x, Tape* tape) {
  double acc = 0.0;
  for (int i = 0; i < x.size(); ++i) acc += x[i];
  const double inv = 1.0 / x.size();
  Tensor result = make_result({1}, {acc * inv}, "mean");
  if (wants_grad(tape, {&x})) {
    Impl xi = x.impl(), oi = result.impl();
    record(tape, {&x}, result, [xi, oi, inv]() {
      for (std::size_t i = 0; i < xi->grad.size(); ++i) xi->grad[i] += oi->grad[0] * inv;
    });
  }
  return result;
}

Tensor mean_pool_rows(const Tensor& m, Tape* tape) {
  if (m.dims() != 2) throw DimensionError("mean_pool_rows: requires a 2-D tensor, got " + shape_str(m.shape()));
  const int r = m.shape()[0];
  const int c = m.shape()[1];
  std::vector<double> out(static_cast<std::size_t>(c), 0.0);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) out[static_cast<std::size_t>(j)] += m.at(i, j);
  }
  const double inv = 1.0 / r;
  for (double& o : out) o *= inv;
  Tensor result = make_result({c}, std::move(out), "mean_pool_rows");
  if (wants_grad(tape, {&m})) {
    Impl mi = m.impl(), oi = result.impl();
    record(tape, {&m}, result, [mi, oi, r, c, inv]() {
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < c; ++j) {
          mi->grad[static_cast<std::size_t>(i) * c + j] += oi->grad[static_cast<std::size_t>(j)] * inv;
        }
      }
    });
  }
  return result;
}

Tensor l1_norm(const Tensor& x, Tape* tape) {
  double acc = 0.0;
  for (int i = 0; i < x.size(); ++i) acc += std::abs(x[i]);
  Tensor result = make_result({1}, {acc}, "l1_norm");
  if (wants_grad(tape, {&x})) {
    Impl xi = x.impl(), oi = result.impl();
    record(tape, {&x}, result, [xi, oi]() {
      for (std::size_t i = 0; i < xi->grad.size(); ++i) {
        const double v = xi->value[i];
        const double s = v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
        xi->grad[i] += oi->grad[0] * s;
      }
    });
  }
  return result;
}

} // namespace ofamas::numeric
