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

namespace sgnn {

// Public batch geometry: M edges in R batches of b = ceil(M / R); batch r
// holds edges [r*b, min(M, (r+1)*b)). Trailing batches may be empty.
struct BatchLayout {
  std::uint64_t nodes = 0;
  std::uint64_t edges = 0;
  std::uint64_t batches = 1;
  std::uint64_t batch_size = 0;

  static BatchLayout make(std::uint64_t nodes, std::uint64_t edges, std::uint64_t batches);
  std::uint64_t begin(std::uint64_t r) const;
  std::uint64_t end(std::uint64_t r) const;
};

// One party's view of the batched edge list: its Z_N shares of each batch's
// first source/destination index, plus the public relative indices.
struct PartyEdges {
  BatchLayout layout;
  std::vector<std::uint64_t> s_first;
  std::vector<std::uint64_t> d_first;
  std::vector<std::uint32_t> s_rel;
  std::vector<std::uint32_t> d_rel;

  // Throws ConfigError on inconsistent lengths or relative index >= N.
  void validate() const;
};

}  // namespace sgnn
