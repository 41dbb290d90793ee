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

#include "sgnn/client/batching.h"
#include "sgnn/field/matrix.h"
#include "sgnn/field/prf.h"

namespace sgnn {

// What the client needs to replay every party's noise: all per-party seeds
// and every party's shares of the batch first indices.
struct NoisePlan {
  int parties = 0;
  std::vector<Seed> seeds;
  // [party][batch], Z_N shares.
  std::vector<std::vector<std::uint64_t>> s_first_shares;
  std::vector<std::vector<std::uint64_t>> d_first_shares;
};

// Splits the first indices and derives per-party seeds from the client's
// master seed.
NoisePlan make_noise_plan(const EdgeBatches& batches, int parties, const Seed& master);

// Overall noise effect xi* for one MPL invocation with K feature columns:
// simulates the read and write passes on noise alone. For a weighted layer
// pass the encoded weights (one per edge); read noise is scaled by them.
Matrix precompute_noise(const EdgeBatches& batches, const NoisePlan& plan, std::size_t cols,
                        std::uint32_t invocation,
                        const std::vector<std::uint64_t>* encoded_weights = nullptr);

// The index each pipeline's final holder reads for edge e, before the
// mod-N reduction: sum of S_f shares and rotations plus the relative index.
std::uint64_t simulated_read_index(const EdgeBatches& batches, const NoisePlan& plan,
                                   std::uint64_t edge, int pipeline, std::uint32_t invocation);

}  // namespace sgnn
