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

#include "sgnn/mpl/streams.h"

#include <algorithm>
#include <vector>

#include "sgnn/kernels/modq.h"

namespace sgnn {
namespace {

StreamId stream(MplStreamKind kind, const MplStreamKey& key) {
  return {kind, key.pipeline, key.batch, 0, key.invocation};
}

bool noise_disabled() {
#ifdef SGNN_ENABLE_TEST_HOOKS
  return mpl_test_hooks().zero_noise;
#else
  return false;
#endif
}

void add_noise(const SeededPrf& prf, StreamId id, std::uint64_t* data, std::size_t count) {
  if (noise_disabled()) return;
  constexpr std::size_t kChunk = 1 << 14;
  std::vector<std::uint64_t> buf(std::min(count, kChunk));
  for (std::size_t off = 0; off < count; off += kChunk) {
    const std::size_t n = std::min(kChunk, count - off);
    prf.fill(id, off, buf.data(), n);
    kernels::add(data + off, data + off, buf.data(), n);
  }
}

}  // namespace

#ifdef SGNN_ENABLE_TEST_HOOKS
MplTestHooks& mpl_test_hooks() {
  static MplTestHooks hooks;
  return hooks;
}
#endif

std::uint64_t read_rotation(const SeededPrf& prf, const MplStreamKey& key, std::uint64_t n) {
#ifdef SGNN_ENABLE_TEST_HOOKS
  if (mpl_test_hooks().read_rotation) {
    if (auto r = mpl_test_hooks().read_rotation(key)) return *r % n;
  }
#endif
  return prf.below(stream(kMplReadRotation, key), n);
}

void add_read_noise(const SeededPrf& prf, const MplStreamKey& key, std::uint64_t* data,
                    std::size_t rows, std::size_t cols) {
  add_noise(prf, stream(kMplReadNoise, key), data, rows * cols);
}

void add_write_noise(const SeededPrf& prf, const MplStreamKey& key, std::uint64_t* data,
                     std::size_t rows, std::size_t cols) {
  add_noise(prf, stream(kMplWriteNoise, key), data, rows * cols);
}

void read_noise_row(const SeededPrf& prf, const MplStreamKey& key, std::size_t cols,
                    std::size_t row, std::uint64_t* out) {
  if (noise_disabled()) {
    std::fill(out, out + cols, 0);
    return;
  }
  prf.fill(stream(kMplReadNoise, key), row * cols, out, cols);
}

}  // namespace sgnn
