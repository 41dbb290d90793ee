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

#include "sgnn/field/prf.h"

namespace sgnn {

// Plaintext graph as the data owner holds it. Edges are always stored
// directed; an undirected input has already been expanded to both
// directions.
struct PlaintextGraph {
  std::uint64_t nodes = 0;
  std::uint64_t feature_dim = 0;
  std::vector<double> features;  // nodes x feature_dim, row-major
  std::vector<std::uint32_t> src;
  std::vector<std::uint32_t> dst;
  std::vector<double> weights;  // empty when unweighted

  std::uint64_t edges() const { return src.size(); }
  bool weighted() const { return !weights.empty(); }
  double feature(std::uint64_t node, std::uint64_t k) const {
    return features[node * feature_dim + k];
  }
  // Throws ConfigError on out-of-range indices, NaN features or length
  // mismatches.
  void validate() const;
};

// Text format: header "N K M [directed|undirected] [weighted]", then N lines
// of K features, then M lines "src dst [weight]". Indices are 0-based.
PlaintextGraph parse_graph(const std::string& text);
PlaintextGraph load_graph(const std::string& path);
std::string format_graph(const PlaintextGraph& g);

// Adds one i -> i edge per node (weight 1 if weighted). GIN aggregation then
// includes each node's own features.
void add_self_loops(PlaintextGraph& g);

// Pads the edge list to `target_edges` with zero-weight edges between
// PRF-chosen nodes; unweighted graphs become weighted with unit weights.
void pad_fake_edges(PlaintextGraph& g, std::uint64_t target_edges, const SeededPrf& rng);

// Random graph for tests and benchmarks: features uniform in
// [-feature_scale, feature_scale], `edges` directed edges chosen uniformly.
PlaintextGraph random_graph(std::uint64_t nodes, std::uint64_t feature_dim, std::uint64_t edges,
                            const SeededPrf& rng, double feature_scale = 1.0);

}  // namespace sgnn
