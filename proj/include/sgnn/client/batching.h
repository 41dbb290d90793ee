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
#include <vector>

#include "sgnn/client/graph.h"
#include "sgnn/mpl/edges.h"

namespace sgnn {

// Client-side batching before sharing: plaintext first indices per batch and
// relative indices per edge, rel = (index - first) mod N.
struct EdgeBatches {
  BatchLayout layout;
  std::vector<std::uint64_t> s_first;
  std::vector<std::uint64_t> d_first;
  std::vector<std::uint32_t> s_rel;
  std::vector<std::uint32_t> d_rel;

  std::uint64_t source(std::uint64_t e) const;
  std::uint64_t destination(std::uint64_t e) const;
  std::uint64_t batch_of(std::uint64_t e) const;
};

// R batches of ceil(M/R) edges; empty trailing batches get first index 0.
EdgeBatches batch_edges(const PlaintextGraph& g, std::uint64_t batches);

}  // namespace sgnn
