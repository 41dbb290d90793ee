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

#include "sgnn/field/matrix.h"
#include "sgnn/field/prf.h"
#include "sgnn/mpl/edges.h"
#include "sgnn/mul/beaver.h"
#include "sgnn/provider/correlated.h"
#include "sgnn/transport/session.h"

namespace sgnn {

// Read pass. Every party starts the pipeline of its own feature share; at
// each visit the holder adds its noise, rotates every batch matrix by its own
// PRF amount and adds (its S_f share + rotation) to the batch's index
// accumulator. After P-1 hops this party holds pipeline (party+1) mod P, fully
// processed, and reads row (acc + S_rel) mod N for every edge. Returns the
// M x K matrix of this party's read shares, one row per edge.
Matrix secure_read(Session& session, const Matrix& features, const PartyEdges& edges,
                   const SeededPrf& prf, std::uint32_t invocation);

// Write pass. Every party scatters its read shares into per-batch zero
// matrices at the relative destination rows, then each visit adds noise and
// rotates by the holder's D_f share. After P-1 hops this party holds the
// finished G matrices of pipeline (party+1) mod P; they are aggregated over
// batches into one N x K share.
Matrix secure_write(Session& session, const Matrix& values, const PartyEdges& edges,
                    const SeededPrf& prf, std::uint32_t invocation);

// acc += g, party-local.
void secure_aggregate(Matrix& acc, const Matrix& g);
void secure_aggregate(Matrix& acc, const std::uint64_t* g);

// Batched secure message passing: read, write, aggregate, subtract xi*.
// Two ring passes of P-1 hops each.
Matrix crypt_mpl(Session& session, const Matrix& features, const PartyEdges& edges,
                 const Matrix& xi_star, const SeededPrf& prf, std::uint32_t invocation);

// Weighted variant: the read shares are multiplied by the per-edge weight
// shares (one elem_mul round, no truncation), written, xi* removed, and the
// aggregate truncated once.
Matrix weighted_mpl(Session& session, const Matrix& features, const PartyEdges& edges,
                    const std::vector<std::uint64_t>& weight_shares, const Matrix& xi_star,
                    const SeededPrf& prf, std::uint32_t invocation, TripleStore& triples,
                    TruncationPool& truncation);

}  // namespace sgnn
