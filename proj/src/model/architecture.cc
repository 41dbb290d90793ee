// Copyright 2026 The sgnn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sgnn/model/architecture.h"

#include <map>

#include "sgnn/common/errors.h"

namespace sgnn {
namespace {

const std::map<std::string, LayerType>& type_table() {
  static const std::map<std::string, LayerType> t = {
      {"mpl", LayerType::kMpl},         {"linear", LayerType::kLinear},
      {"batchnorm", LayerType::kBatchNorm}, {"relu", LayerType::kRelu},
      {"sigmoid", LayerType::kSigmoid}, {"save", LayerType::kSave},
      {"concat", LayerType::kConcat},   {"sum_pool", LayerType::kSumPool},
  };
  return t;
}

}  // namespace

const char* layer_type_name(LayerType t) {
  for (const auto& [name, type] : type_table()) {
    if (type == t) return name.c_str();
  }
  return "unknown";
}

void Architecture::validate() {
  if (input_dim == 0) throw ConfigError("architecture: input_dim must be positive");
  std::size_t dim = input_dim;
  std::vector<std::size_t> saved;
  bool pooled_now = false;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    LayerSpec& l = layers[i];
    const std::string where = "architecture layer " + std::to_string(i) + " (" +
                              layer_type_name(l.type) + ")";
    switch (l.type) {
      case LayerType::kLinear:
        if (l.in != dim) {
          throw ConfigError(where + ": expects width " + std::to_string(l.in) + ", gets " +
                            std::to_string(dim));
        }
        if (l.out == 0) throw ConfigError(where + ": zero output width");
        dim = l.out;
        break;
      case LayerType::kBatchNorm:
        if (l.in != 0 && l.in != dim) throw ConfigError(where + ": width mismatch");
        l.in = l.out = dim;
        break;
      case LayerType::kMpl:
        if (pooled_now) throw ConfigError(where + ": message passing after pooling");
        l.in = l.out = dim;
        break;
      case LayerType::kRelu:
      case LayerType::kSigmoid:
        l.in = l.out = dim;
        break;
      case LayerType::kSave:
        saved.push_back(dim);
        l.in = l.out = dim;
        break;
      case LayerType::kConcat: {
        if (saved.empty()) throw ConfigError(where + ": nothing saved");
        l.in = dim;
        dim = 0;
        for (auto s : saved) dim += s;
        saved.clear();
        l.out = dim;
        break;
      }
      case LayerType::kSumPool:
        if (pooled_now) throw ConfigError(where + ": already pooled");
        pooled_now = true;
        l.in = l.out = dim;
        break;
    }
  }
}

std::size_t Architecture::output_dim() const {
  return layers.empty() ? input_dim : layers.back().out;
}

bool Architecture::pooled() const { return count(LayerType::kSumPool) > 0; }

std::vector<std::size_t> Architecture::mpl_dims() const {
  std::vector<std::size_t> out;
  for (const auto& l : layers) {
    if (l.type == LayerType::kMpl) out.push_back(l.in);
  }
  return out;
}

std::size_t Architecture::count(LayerType t) const {
  std::size_t n = 0;
  for (const auto& l : layers) n += l.type == t;
  return n;
}

nlohmann::json Architecture::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["input_dim"] = input_dim;
  j["self_loops"] = self_loops;
  j["weighted_edges"] = weighted_edges;
  j["layers"] = nlohmann::json::array();
  for (const auto& l : layers) {
    nlohmann::json lj{{"type", layer_type_name(l.type)}};
    if (l.type == LayerType::kLinear) {
      lj["in"] = l.in;
      lj["out"] = l.out;
    }
    j["layers"].push_back(lj);
  }
  return j;
}

Architecture Architecture::from_json(const nlohmann::json& j) {
  try {
    Architecture a;
    a.name = j.value("name", "model");
    a.input_dim = j.at("input_dim").get<std::size_t>();
    a.self_loops = j.value("self_loops", false);
    a.weighted_edges = j.value("weighted_edges", false);
    for (const auto& lj : j.at("layers")) {
      const std::string type = lj.at("type").get<std::string>();
      auto it = type_table().find(type);
      if (it == type_table().end()) throw ConfigError("architecture: unknown layer type " + type);
      LayerSpec l;
      l.type = it->second;
      if (l.type == LayerType::kLinear) {
        l.in = lj.at("in").get<std::size_t>();
        l.out = lj.at("out").get<std::size_t>();
      }
      a.layers.push_back(l);
    }
    a.validate();
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("architecture: ") + e.what());
  }
}

std::string Architecture::canonical() const { return to_json().dump(); }

Architecture gin_architecture(std::size_t input_dim, std::size_t hidden, std::size_t classes,
                              int mpl_blocks) {
  Architecture a;
  a.name = "gin";
  a.input_dim = input_dim;
  a.self_loops = true;
  std::size_t dim = input_dim;
  for (int b = 0; b < mpl_blocks; ++b) {
    a.layers.push_back({LayerType::kMpl});
    a.layers.push_back({LayerType::kLinear, dim, hidden});
    a.layers.push_back({LayerType::kBatchNorm});
    a.layers.push_back({LayerType::kRelu});
    a.layers.push_back({LayerType::kLinear, hidden, hidden});
    a.layers.push_back({LayerType::kRelu});
    a.layers.push_back({LayerType::kSave});
    dim = hidden;
  }
  a.layers.push_back({LayerType::kConcat});
  a.layers.push_back({LayerType::kSumPool});
  a.layers.push_back({LayerType::kLinear, hidden * mpl_blocks, hidden});
  a.layers.push_back({LayerType::kRelu});
  a.layers.push_back({LayerType::kLinear, hidden, classes});
  a.validate();
  return a;
}

ResourceCount count_resources(const Architecture& arch, std::uint64_t nodes, std::uint64_t edges) {
  ResourceCount rc;
  std::uint64_t rows = nodes;
  for (const auto& l : arch.layers) {
    const std::uint64_t cells = rows * l.in;
    switch (l.type) {
      case LayerType::kMpl:
        if (arch.weighted_edges) {
          rc.elem_mul += edges * l.in;
          rc.truncations += cells;
        }
        break;
      case LayerType::kLinear:
        rc.truncations += rows * l.out;
        break;
      case LayerType::kBatchNorm:
        rc.elem_mul += cells;
        rc.truncations += cells;
        break;
      case LayerType::kRelu:
        rc.compares += cells;
        rc.elem_mul += cells;
        break;
      case LayerType::kSigmoid:
        rc.compares += 2 * cells;
        rc.elem_mul += 9 * cells;
        rc.truncations += 9 * cells;
        break;
      case LayerType::kSumPool:
        rows = 1;
        break;
      case LayerType::kSave:
      case LayerType::kConcat:
        break;
    }
  }
  return rc;
}

std::uint64_t expected_rounds(const Architecture& arch, int parties, std::uint64_t nodes,
                              std::uint64_t edges) {
  std::uint64_t rounds = count_resources(arch, nodes, edges).elem_mul > 0 ? 1 : 0;
  for (const auto& l : arch.layers) {
    switch (l.type) {
      case LayerType::kMpl:
        rounds += 2 * static_cast<std::uint64_t>(parties - 1);
        if (arch.weighted_edges) rounds += 2;
        break;
      case LayerType::kLinear: rounds += 2; break;
      case LayerType::kBatchNorm: rounds += 2; break;
      case LayerType::kRelu: rounds += 3; break;
      case LayerType::kSigmoid: rounds += 13; break;
      default: break;
    }
  }
  return rounds;
}

}  // namespace sgnn
