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

#include "sgnn/client/batching.h"
#include "sgnn/client/graph.h"
#include "sgnn/client/noise_plan.h"
#include "sgnn/field/fixed_point.h"
#include "sgnn/field/matrix.h"
#include "sgnn/field/prf.h"
#include "sgnn/mpl/edges.h"
#include "sgnn/transport/wire.h"

namespace sgnn {

// Everything one party receives from the client for one inference.
struct GraphUpload {
  SessionId session{};
  int party = 0;
  int parties = 0;
  int fraction_bits = 16;
  std::uint64_t feature_dim = 0;
  Matrix features;                      // N x K share
  PartyEdges edges;                     // S_f/D_f shares, S_r/D_r
  std::vector<Matrix> xi_star;          // one per MPL invocation
  std::vector<std::uint64_t> weights;   // M shares; empty when unweighted
  Seed seed{};
  std::uint64_t request_nonce = 0;
};

struct UploadOptions {
  int parties = 3;
  std::uint64_t batches = 20;
  int fraction_bits = 16;
  // Feature width at each MPL invocation, in order.
  std::vector<std::size_t> mpl_dims;
  Seed master{};
  std::uint64_t request_nonce = 0;
};

// Encodes, batches, precomputes noise and shares everything for P parties.
std::vector<GraphUpload> assemble_upload(const PlaintextGraph& g, const UploadOptions& opt);

// Lower-level form, when the caller already has batches and a plan.
std::vector<GraphUpload> assemble_upload(const PlaintextGraph& g, const EdgeBatches& batches,
                                         const NoisePlan& plan, const UploadOptions& opt);

SessionId derive_session_id(const Seed& master, std::uint64_t request_nonce);

// Bundle file: magic "SGNNUPL1", session id, u32 N, K, M, R, P, f, party,
// u32 flags (bit 0: weighted), u64 request nonce, feature share, S_f and D_f
// shares (R x 1), u32 xi* count and matrices, weight shares (M x 1, if
// weighted), S_r and D_r as u32 little-endian, then the 32-byte seed.
Bytes serialize_upload(const GraphUpload& u);
GraphUpload deserialize_upload(const Bytes& data);

struct ClassResult {
  std::vector<double> logits;
  std::vector<double> probabilities;
  std::size_t argmax = 0;
};

// Sums the parties' result shares, decodes, softmax on the client side.
ClassResult reconstruct_result(const std::vector<Matrix>& shares, const FixedPointCodec& codec);
ClassResult softmax_result(const std::vector<double>& logits);

std::vector<std::uint64_t> encode_all(const std::vector<double>& v, const FixedPointCodec& codec);
Matrix encode_matrix(const std::vector<double>& v, std::size_t rows, std::size_t cols,
                     const FixedPointCodec& codec);
std::vector<double> decode_all(const Matrix& m, const FixedPointCodec& codec);

}  // namespace sgnn
