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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace sgnn {

enum class LayerType { kMpl, kLinear, kBatchNorm, kRelu, kSigmoid, kSave, kConcat, kSumPool };

const char* layer_type_name(LayerType t);

struct LayerSpec {
  LayerType type = LayerType::kRelu;
  std::size_t in = 0;   // input width (all layers, filled by validate())
  std::size_t out = 0;  // output width
};

// Public model descriptor shared by the model owner with clients and parties.
// "save" pushes the current activation onto a list, "concat" replaces the
// activation with the horizontal concatenation of the saved ones, and
// "sum_pool" sums over nodes (graph-level readout).
struct Architecture {
  std::string name = "model";
  std::size_t input_dim = 0;
  bool self_loops = false;      // client adds i -> i edges before upload
  bool weighted_edges = false;  // MPL layers multiply by edge weights
  std::vector<LayerSpec> layers;

  // Fills in/out for every layer; throws ConfigError on a broken dim chain.
  void validate();
  std::size_t output_dim() const;
  bool pooled() const;
  // Feature width at each MPL layer, in order.
  std::vector<std::size_t> mpl_dims() const;
  std::size_t count(LayerType t) const;

  nlohmann::json to_json() const;
  static Architecture from_json(const nlohmann::json& j);
  // Canonical text: sorted keys, no whitespace.
  std::string canonical() const;
};

// Three [MPL, linear, batch-norm, ReLU, linear, ReLU] blocks whose outputs are
// concatenated, summed over nodes, then linear + ReLU and a final linear.
Architecture gin_architecture(std::size_t input_dim, std::size_t hidden, std::size_t classes,
                              int mpl_blocks = 3);

// Per-inference consumption of correlated randomness.
struct ResourceCount {
  std::uint64_t elem_mul = 0;    // fresh triples (3 AM pairs each)
  std::uint64_t truncations = 0;
  std::uint64_t compares = 0;
  std::uint64_t am_pairs() const { return 3 * elem_mul; }
};

ResourceCount count_resources(const Architecture& arch, std::uint64_t nodes, std::uint64_t edges);

// Communication rounds of one secure inference. The first inference of a
// client also opens V for every linear layer, merged into the U round, so
// the count does not depend on the V cache.
std::uint64_t expected_rounds(const Architecture& arch, int parties, std::uint64_t nodes,
                              std::uint64_t edges);

}  // namespace sgnn
