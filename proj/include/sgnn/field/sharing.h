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

namespace sgnn {

// P additive shares of `secret`: the first P-1 drawn from `rng` under `stream`
// (share i uses stream.c = i), the last the difference.
std::vector<Matrix> split_additive(const Matrix& secret, int parties, const SeededPrf& rng,
                                   StreamId stream = {});
Matrix reconstruct_additive(const std::vector<Matrix>& shares);

std::vector<std::uint64_t> split_scalar(std::uint64_t secret, int parties, const SeededPrf& rng,
                                        StreamId stream, std::uint64_t index);
std::uint64_t reconstruct_scalar(const std::vector<std::uint64_t>& shares);

// Nonzero multiplicative shares whose product is `secret` (nonzero).
std::vector<std::uint64_t> split_multiplicative(std::uint64_t secret, int parties,
                                                const SeededPrf& rng, StreamId stream,
                                                std::uint64_t index);
std::uint64_t reconstruct_multiplicative(const std::vector<std::uint64_t>& shares);

// Additive shares of an index in Z_n (not the field).
std::vector<std::uint64_t> split_index(std::uint64_t index, std::uint64_t n, int parties,
                                       const SeededPrf& rng, StreamId stream);

}  // namespace sgnn
