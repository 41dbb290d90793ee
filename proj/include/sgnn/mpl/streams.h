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
#include <functional>
#include <optional>

#include "sgnn/field/prf.h"

namespace sgnn {

// PRF streams of the message-passing protocol. A stream is named by the
// processing party's seed plus (kind, pipeline origin, batch, invocation), so
// the client, holding every seed, can regenerate exactly what each party
// adds.
enum MplStreamKind : std::uint32_t {
  kMplReadNoise = 0x500,
  kMplReadRotation = 0x501,
  kMplWriteNoise = 0x502,
};

struct MplStreamKey {
  int party = 0;
  std::uint32_t pipeline = 0;
  std::uint32_t batch = 0;
  std::uint32_t invocation = 0;
};

// Rotation in [0, n) applied by `key.party` to pipeline `key.pipeline` during
// the read pass of batch `key.batch`.
std::uint64_t read_rotation(const SeededPrf& prf, const MplStreamKey& key, std::uint64_t n);

// out[...] += noise, for the whole rows x cols matrix.
void add_read_noise(const SeededPrf& prf, const MplStreamKey& key, std::uint64_t* data,
                    std::size_t rows, std::size_t cols);
void add_write_noise(const SeededPrf& prf, const MplStreamKey& key, std::uint64_t* data,
                     std::size_t rows, std::size_t cols);

// Single noise row, for the client's sparse simulation of the read pass.
void read_noise_row(const SeededPrf& prf, const MplStreamKey& key, std::size_t cols,
                    std::size_t row, std::uint64_t* out);

#ifdef SGNN_ENABLE_TEST_HOOKS
// Test-only overrides, compiled out of release builds. Set before a run and
// leave untouched while parties execute.
struct MplTestHooks {
  bool zero_noise = false;
  std::function<std::optional<std::uint64_t>(const MplStreamKey&)> read_rotation;
};
MplTestHooks& mpl_test_hooks();
#endif

}  // namespace sgnn
