#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace topoprobe {

// Global neuron index. Output neurons take 0..output_size-1, then each
// earlier layer in turn toward the input.
using NeuronId = std::uint32_t;

// Weights of one fully connected layer. Entry (src, dst) is the forward
// weight from source neuron `src` to destination neuron `dst`.
struct LayerMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> weights;  // row-major, rows * cols

  double at(std::size_t src, std::size_t dst) const { return weights[src * cols + dst]; }
  double& at(std::size_t src, std::size_t dst) { return weights[src * cols + dst]; }

  bool operator==(const LayerMatrix&) const = default;
};

struct NetworkModel {
  std::string name;
  std::size_t output_size = 0;
  std::vector<std::size_t> used_outputs;  // sorted, unique
  std::vector<LayerMatrix> layers;        // input side first

  bool operator==(const NetworkModel&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, missing_key, bad_value, shape_mismatch, non_finite };

  ParseError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Throws ParseError if any NetworkModel invariant is violated.
void validate(const NetworkModel& model);

NetworkModel parse_weights(std::string_view json_text);
NetworkModel load_weights_file(const std::filesystem::path& path);
std::string serialize_weights(const NetworkModel& model);

// Layered DAG over globally numbered neurons.
//
// Neuron layers are addressed by depth: depth 0 is the output layer, depth
// d+1 feeds depth d. Every nonzero weight(i, j) has depth_of(i) ==
// depth_of(j) + 1, which under the global numbering implies i > j.
class NetworkGraph {
 public:
  explicit NetworkGraph(NetworkModel model);

  std::size_t size() const { return n_; }
  std::size_t depth_count() const { return first_id_.size() - 1; }
  std::size_t layer_size(std::size_t depth) const { return first_id_[depth + 1] - first_id_[depth]; }
  NeuronId first_id(std::size_t depth) const { return static_cast<NeuronId>(first_id_[depth]); }
  std::size_t depth_of(NeuronId id) const;

  NeuronId id_of(std::size_t depth, std::size_t position) const {
    return static_cast<NeuronId>(first_id_[depth] + position);
  }
  std::pair<std::size_t, std::size_t> locate(NeuronId id) const;

  // Forward weight id `src` -> id `dst`; zero when the two are not in
  // adjacent layers.
  double weight(NeuronId src, NeuronId dst) const;

  std::span<const NeuronId> output_ids() const { return output_ids_; }
  std::span<const NeuronId> unused_output_ids() const { return unused_output_ids_; }
  const NetworkModel& model() const { return model_; }

 private:
  // Matrix connecting depth+1 (rows) to depth (cols).
  const LayerMatrix& matrix_into(std::size_t depth) const {
    return model_.layers[model_.layers.size() - 1 - depth];
  }

  NetworkModel model_;
  std::size_t n_ = 0;
  std::vector<std::size_t> first_id_;  // depth_count + 1 offsets
  std::vector<NeuronId> output_ids_;
  std::vector<NeuronId> unused_output_ids_;
};

NetworkGraph assign_global_indices(const NetworkModel& model);

}  // namespace topoprobe
