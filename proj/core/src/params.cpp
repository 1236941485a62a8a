#include "ofamas/params.hpp"

#include <cmath>

namespace ofamas::numeric {

Tensor& ModelParams::add(const std::string& name, Tensor t) {
  if (by_name_.count(name)) throw ConfigError("duplicate parameter name: " + name);
  t.mark_parameter(name);
  auto [it, inserted] = by_name_.emplace(name, std::move(t));
  return it->second;
}

const Tensor& ModelParams::at(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) throw ConfigError("unknown parameter: " + name);
  return it->second;
}

void ModelParams::set(const std::string& name, Tensor t) {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) throw ConfigError("unknown parameter: " + name);
  if (t.shape() != it->second.shape()) {
    throw ConfigError("parameter " + name + " shape mismatch on update");
  }
  t.mark_parameter(name);
  it->second = std::move(t);
}

std::vector<std::string> ModelParams::names() const {
  std::vector<std::string> out;
  out.reserve(by_name_.size());
  for (const auto& [name, _] : by_name_) out.push_back(name);
  return out;
}

std::size_t ModelParams::total_values() const {
  std::size_t n = 0;
  for (const auto& [_, t] : by_name_) n += static_cast<std::size_t>(t.size());
  return n;
}

Tensor glorot(int rows, int cols, Rng& rng) {
  const double bound = std::sqrt(6.0 / (rows + cols));
  std::vector<double> data(static_cast<std::size_t>(rows) * cols);
  for (double& v : data) v = rng.uniform(-bound, bound);
  return Tensor::of({rows, cols}, std::move(data));
}

} // namespace ofamas::numeric
