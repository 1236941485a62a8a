#pragma once

#include <map>
#include <string>
#include <vector>

#include "ofamas/rng.hpp"
#include "ofamas/tensor.hpp"

namespace ofamas::numeric {

// Every learnable tensor of the model, addressable by a stable name.
// Insertion marks the tensor as a gradient-carrying leaf; updates replace
// the stored tensor wholesale (tensors themselves stay immutable).
class ModelParams {
public:
  Tensor& add(const std::string& name, Tensor t);
  const Tensor& at(const std::string& name) const;
  bool contains(const std::string& name) const { return by_name_.count(name) > 0; }

  // Replaces the value of an existing parameter; the new tensor must have
  // the same shape and is re-marked as a named leaf.
  void set(const std::string& name, Tensor t);

  std::vector<std::string> names() const;
  std::size_t count() const { return by_name_.size(); }
  std::size_t total_values() const;

  const std::map<std::string, Tensor>& all() const { return by_name_; }

private:
  std::map<std::string, Tensor> by_name_;
};

// Glorot-uniform weight matrix: entries uniform on +/- sqrt(6/(fan_in+fan_out)).
Tensor glorot(int rows, int cols, Rng& rng);

} // namespace ofamas::numeric
