#include "topoprobe/weightnet.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace topoprobe {

namespace {

using json = nlohmann::json;
using Kind = ParseError::Kind;

const json& require_key(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(Kind::missing_key, where + ": missing key \"" + key + "\"");
  return *it;
}

std::size_t require_count(const json& value, const std::string& what, bool allow_zero) {
  if (!value.is_number_integer()) throw ParseError(Kind::bad_value, what + ": expected an integer");
  const auto v = value.get<std::int64_t>();
  if (v < 0 || (!allow_zero && v == 0)) {
    throw ParseError(Kind::bad_value, what + ": must be " + (allow_zero ? "non-negative" : "positive"));
  }
  return static_cast<std::size_t>(v);
}

LayerMatrix parse_layer(const json& node, std::size_t index) {
  const std::string where = "layer " + std::to_string(index);
  if (!node.is_object()) throw ParseError(Kind::syntax, where + ": expected an object");

  LayerMatrix layer;
  layer.rows = require_count(require_key(node, "rows", where), where + " rows", false);
  layer.cols = require_count(require_key(node, "cols", where), where + " cols", false);

  const json& rows = require_key(node, "weights", where);
  if (!rows.is_array() || rows.size() != layer.rows) {
    throw ParseError(Kind::shape_mismatch,
                     where + ": weights must be an array of " + std::to_string(layer.rows) + " rows");
  }
  layer.weights.reserve(layer.rows * layer.cols);
  for (std::size_t i = 0; i < layer.rows; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != layer.cols) {
      throw ParseError(Kind::shape_mismatch, where + " row " + std::to_string(i) + ": expected " +
                                                 std::to_string(layer.cols) + " entries");
    }
    for (std::size_t j = 0; j < layer.cols; ++j) {
      const std::string entry = where + " entry [" + std::to_string(i) + "][" + std::to_string(j) + "]";
      if (!row[j].is_number()) throw ParseError(Kind::bad_value, entry + ": not a number");
      const double w = row[j].get<double>();
      if (!std::isfinite(w)) throw ParseError(Kind::non_finite, entry + ": non-finite weight");
      layer.weights.push_back(w);
    }
  }
  return layer;
}

}  // namespace

void validate(const NetworkModel& model) {
  if (model.layers.empty()) throw ParseError(Kind::bad_value, "model has no layers");
  for (std::size_t k = 0; k < model.layers.size(); ++k) {
    const auto& layer = model.layers[k];
    const std::string where = "layer " + std::to_string(k);
    if (layer.rows == 0 || layer.cols == 0) throw ParseError(Kind::bad_value, where + ": empty shape");
    if (layer.weights.size() != layer.rows * layer.cols) {
      throw ParseError(Kind::shape_mismatch, where + ": weight count does not match rows x cols");
    }
    for (std::size_t e = 0; e < layer.weights.size(); ++e) {
      if (!std::isfinite(layer.weights[e])) {
        throw ParseError(Kind::non_finite, where + " entry [" + std::to_string(e / layer.cols) + "][" +
                                               std::to_string(e % layer.cols) + "]: non-finite weight");
      }
    }
    if (k + 1 < model.layers.size() && layer.cols != model.layers[k + 1].rows) {
      throw ParseError(Kind::shape_mismatch, "layer " + std::to_string(k) + " has " +
                                                 std::to_string(layer.cols) + " outputs but layer " +
                                                 std::to_string(k + 1) + " has " +
                                                 std::to_string(model.layers[k + 1].rows) + " inputs");
    }
  }
  if (model.output_size != model.layers.back().cols) {
    throw ParseError(Kind::shape_mismatch, "output_size " + std::to_string(model.output_size) +
                                               " does not match last layer cols " +
                                               std::to_string(model.layers.back().cols));
  }
  if (!std::is_sorted(model.used_outputs.begin(), model.used_outputs.end()) ||
      std::adjacent_find(model.used_outputs.begin(), model.used_outputs.end()) != model.used_outputs.end()) {
    throw ParseError(Kind::bad_value, "used_outputs must be sorted and unique");
  }
  if (!model.used_outputs.empty() && model.used_outputs.back() >= model.output_size) {
    throw ParseError(Kind::bad_value, "used_outputs contains an index outside 0..output_size-1");
  }
}

NetworkModel parse_weights(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(Kind::syntax, std::string("malformed JSON: ") + e.what());
  } catch (const json::out_of_range& e) {
    // number overflow, e.g. 1e999
    throw ParseError(Kind::non_finite, std::string("non-finite number: ") + e.what());
  }
  if (!root.is_object()) throw ParseError(Kind::syntax, "top level must be an object");

  const json& version = require_key(root, "format_version", "weights file");
  if (!version.is_number_integer() || version.get<std::int64_t>() != 1) {
    throw ParseError(Kind::bad_value, "unsupported format_version (expected 1)");
  }

  NetworkModel model;
  const json& name = require_key(root, "name", "weights file");
  if (!name.is_string()) throw ParseError(Kind::bad_value, "name: expected a string");
  model.name = name.get<std::string>();
  model.output_size = require_count(require_key(root, "output_size", "weights file"), "output_size", false);

  const json& used = require_key(root, "used_outputs", "weights file");
  if (!used.is_array()) throw ParseError(Kind::bad_value, "used_outputs: expected an array");
  for (const auto& u : used) model.used_outputs.push_back(require_count(u, "used_outputs entry", true));
  std::sort(model.used_outputs.begin(), model.used_outputs.end());
  model.used_outputs.erase(std::unique(model.used_outputs.begin(), model.used_outputs.end()),
                           model.used_outputs.end());

  const json& layers = require_key(root, "layers", "weights file");
  if (!layers.is_array()) throw ParseError(Kind::bad_value, "layers: expected an array");
  for (std::size_t k = 0; k < layers.size(); ++k) model.layers.push_back(parse_layer(layers[k], k));

  validate(model);
  return model;
}

NetworkModel load_weights_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open weights file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_weights(buf.str());
}

std::string serialize_weights(const NetworkModel& model) {
  json root;
  root["format_version"] = 1;
  root["name"] = model.name;
  root["output_size"] = model.output_size;
  root["used_outputs"] = model.used_outputs;
  json layers = json::array();
  for (const auto& layer : model.layers) {
    json rows = json::array();
    for (std::size_t i = 0; i < layer.rows; ++i) {
      rows.push_back(std::vector<double>(layer.weights.begin() + static_cast<std::ptrdiff_t>(i * layer.cols),
                                         layer.weights.begin() + static_cast<std::ptrdiff_t>((i + 1) * layer.cols)));
    }
    layers.push_back({{"rows", layer.rows}, {"cols", layer.cols}, {"weights", std::move(rows)}});
  }
  root["layers"] = std::move(layers);
  return root.dump() + "\n";
}

NetworkGraph::NetworkGraph(NetworkModel model) : model_(std::move(model)) {
  validate(model_);
  // depth 0 = output layer; the input layer sits at depth layers.size().
  const std::size_t depths = model_.layers.size() + 1;
  first_id_.assign(depths + 1, 0);
  for (std::size_t d = 0; d < depths; ++d) {
    const std::size_t size = d == 0 ? model_.output_size : matrix_into(d - 1).rows;
    first_id_[d + 1] = first_id_[d] + size;
  }
  n_ = first_id_.back();

  for (std::size_t j = 0; j < model_.output_size; ++j) output_ids_.push_back(static_cast<NeuronId>(j));
  for (std::size_t j = 0; j < model_.output_size; ++j) {
    if (!std::binary_search(model_.used_outputs.begin(), model_.used_outputs.end(), j)) {
      unused_output_ids_.push_back(static_cast<NeuronId>(j));
    }
  }
}

std::size_t NetworkGraph::depth_of(NeuronId id) const {
  if (id >= n_) throw std::out_of_range("neuron id out of range");
  auto it = std::upper_bound(first_id_.begin(), first_id_.end(), static_cast<std::size_t>(id));
  return static_cast<std::size_t>(it - first_id_.begin()) - 1;
}

std::pair<std::size_t, std::size_t> NetworkGraph::locate(NeuronId id) const {
  const std::size_t d = depth_of(id);
  return {d, id - first_id_[d]};
}

double NetworkGraph::weight(NeuronId src, NeuronId dst) const {
  const auto [ds, ps] = locate(src);
  const auto [dd, pd] = locate(dst);
  if (ds != dd + 1) return 0.0;
  return matrix_into(dd).at(ps, pd);
}

NetworkGraph assign_global_indices(const NetworkModel& model) { return NetworkGraph(model); }

}  // namespace topoprobe
