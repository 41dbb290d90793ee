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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "sgnn/field/matrix.h"

namespace sgnn {

using Seed = std::array<std::uint8_t, 32>;

// Domain separation for one PRF stream. Consumers assign `kind`; a, b, c name
// the stream within that kind and `round` is the monotone counter.
struct StreamId {
  std::uint32_t kind = 0;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t c = 0;
  std::uint64_t round = 0;
};

// Keyed stream over the XChaCha20 keystream. Output word i of a stream sits
// at keystream byte 8i, so any element range can be produced without
// generating its prefix.
class SeededPrf {
 public:
  SeededPrf() = default;
  explicit SeededPrf(const Seed& seed) : seed_(seed) {}

  // Deterministic seed from an integer, for tests and CLI --seed.
  static SeededPrf from_u64(std::uint64_t value);

  const Seed& seed() const { return seed_; }

  // Field element number `index` of the stream; uniform on [0, q).
  std::uint64_t element(const StreamId& id, std::uint64_t index) const;
  // Elements [start, start + count) of the stream.
  void fill(const StreamId& id, std::uint64_t start, std::uint64_t* out, std::size_t count) const;
  // rows x cols matrix made of stream elements 0 .. rows*cols-1 in row-major
  // order. Row r alone is fill(id, r*cols, ..., cols).
  Matrix matrix(const StreamId& id, std::size_t rows, std::size_t cols) const;
  // Uniform nonzero field element (independent sub-stream of `id`).
  std::uint64_t nonzero(const StreamId& id, std::uint64_t index) const;
  // Uniform integer in [0, bound) by rejection on 64-bit words.
  std::uint64_t below(const StreamId& id, std::uint64_t bound) const;
  // Raw 64-bit words, no reduction.
  void words(const StreamId& id, std::uint64_t start, std::uint64_t* out, std::size_t count) const;

 private:
  Seed seed_{};
};

// Keyed BLAKE2b-256 of (label, index) under `master`.
Seed derive_seed(const Seed& master, std::string_view label, std::uint64_t index);

std::string seed_hex(const Seed& s);

// prf_matrix(prf, round, shape): the generic matrix stream for a counter.
Matrix prf_matrix(const SeededPrf& prf, std::uint64_t round, std::size_t rows, std::size_t cols);

// Makes sure libsodium is initialised; cheap after the first call.
void ensure_crypto();

}  // namespace sgnn
