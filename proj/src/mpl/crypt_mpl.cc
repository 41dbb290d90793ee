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

#include "sgnn/mpl/crypt_mpl.h"

#include <string>

#include "sgnn/common/errors.h"
#include "sgnn/mul/truncate.h"

namespace sgnn {

BatchLayout BatchLayout::make(std::uint64_t nodes, std::uint64_t edges, std::uint64_t batches) {
  if (nodes == 0) throw ConfigError("graph must have at least one node");
  if (batches == 0) throw ConfigError("batch count must be >= 1");
  if (edges > 0 && batches > edges) {
    throw ConfigError("batch count " + std::to_string(batches) + " exceeds edge count " +
                      std::to_string(edges));
  }
  BatchLayout l;
  l.nodes = nodes;
  l.edges = edges;
  l.batches = batches;
  l.batch_size = edges == 0 ? 0 : (edges + batches - 1) / batches;
  return l;
}

std::uint64_t BatchLayout::begin(std::uint64_t r) const {
  return std::min(edges, r * batch_size);
}

std::uint64_t BatchLayout::end(std::uint64_t r) const {
  return std::min(edges, (r + 1) * batch_size);
}

void PartyEdges::validate() const {
  if (s_first.size() != layout.batches || d_first.size() != layout.batches) {
    throw ConfigError("edge bundle: need one first-index share per batch");
  }
  if (s_rel.size() != layout.edges || d_rel.size() != layout.edges) {
    throw ConfigError("edge bundle: need one relative index per edge");
  }
  for (std::uint64_t i = 0; i < layout.batches; ++i) {
    if (s_first[i] >= layout.nodes || d_first[i] >= layout.nodes) {
      throw ConfigError("edge bundle: first-index share outside [0, N)");
    }
  }
  for (std::uint64_t e = 0; e < layout.edges; ++e) {
    if (s_rel[e] >= layout.nodes || d_rel[e] >= layout.nodes) {
      throw ConfigError("edge bundle: relative index " + std::to_string(e) + " outside [0, N)");
    }
  }
}

Matrix crypt_mpl(Session& session, const Matrix& features, const PartyEdges& edges,
                 const Matrix& xi_star, const SeededPrf& prf, std::uint32_t invocation) {
  require_same_shape(features, xi_star, "crypt_mpl xi*");
  const Matrix y = secure_read(session, features, edges, prf, invocation);
  Matrix out = secure_write(session, y, edges, prf, invocation);
  out -= xi_star;
  return out;
}

Matrix weighted_mpl(Session& session, const Matrix& features, const PartyEdges& edges,
                    const std::vector<std::uint64_t>& weight_shares, const Matrix& xi_star,
                    const SeededPrf& prf, std::uint32_t invocation, TripleStore& triples,
                    TruncationPool& truncation) {
  require_same_shape(features, xi_star, "weighted_mpl xi*");
  if (weight_shares.size() != edges.layout.edges) {
    throw ShapeError("weighted_mpl: one weight per edge required");
  }
  const Matrix y = secure_read(session, features, edges, prf, invocation);
  Matrix w(y.rows(), y.cols());
  for (std::size_t e = 0; e < y.rows(); ++e) {
    std::fill(w.row(e), w.row(e) + w.cols(), weight_shares[e]);
  }
  const Matrix weighted = elem_mul(session, w, y, triples, "weighted-mpl");
  Matrix out = secure_write(session, weighted, edges, prf, invocation);
  out -= xi_star;
  return truncate(session, out, truncation, "weighted-mpl");
}

}  // namespace sgnn
