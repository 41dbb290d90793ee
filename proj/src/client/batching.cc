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

#include "sgnn/client/batching.h"

namespace sgnn {

std::uint64_t EdgeBatches::batch_of(std::uint64_t e) const { return e / layout.batch_size; }

std::uint64_t EdgeBatches::source(std::uint64_t e) const {
  return (s_first[batch_of(e)] + s_rel[e]) % layout.nodes;
}

std::uint64_t EdgeBatches::destination(std::uint64_t e) const {
  return (d_first[batch_of(e)] + d_rel[e]) % layout.nodes;
}

EdgeBatches batch_edges(const PlaintextGraph& g, std::uint64_t batches) {
  EdgeBatches b;
  b.layout = BatchLayout::make(g.nodes, g.edges(), batches);
  const std::uint64_t n = g.nodes;
  b.s_first.assign(b.layout.batches, 0);
  b.d_first.assign(b.layout.batches, 0);
  b.s_rel.resize(g.edges());
  b.d_rel.resize(g.edges());
  for (std::uint64_t r = 0; r < b.layout.batches; ++r) {
    const std::uint64_t begin = b.layout.begin(r), end = b.layout.end(r);
    if (begin == end) continue;
    b.s_first[r] = g.src[begin];
    b.d_first[r] = g.dst[begin];
    for (std::uint64_t e = begin; e < end; ++e) {
      b.s_rel[e] = static_cast<std::uint32_t>((g.src[e] + n - b.s_first[r]) % n);
      b.d_rel[e] = static_cast<std::uint32_t>((g.dst[e] + n - b.d_first[r]) % n);
    }
  }
  return b;
}

}  // namespace sgnn
