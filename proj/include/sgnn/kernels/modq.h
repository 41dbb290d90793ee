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

#include <cstddef>
#include <cstdint>
#include <string_view>

// Vector arithmetic mod q = 2^61 - 1. Inputs must already be reduced; all
// outputs are reduced. dst may alias an input.

namespace sgnn::kernels {

enum class Isa { kScalar, kAvx2 };

struct KernelTable {
  Isa isa;
  void (*add)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  void (*sub)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  void (*mul)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  // dst[i] = dst[i] + s * x[i]
  void (*axpy)(std::uint64_t* dst, std::uint64_t s, const std::uint64_t* x, std::size_t n);
  // dst[i] = s * x[i]
  void (*scale)(std::uint64_t* dst, std::uint64_t s, const std::uint64_t* x, std::size_t n);
};

const KernelTable& scalar_table();
// Only valid when the CPU reports AVX2.
const KernelTable& avx2_table();

bool cpu_has_avx2();

// The table picked at startup: AVX2 when available, else scalar. The
// CRYPTGNN_ISA environment variable ("scalar" or "avx2") overrides.
const KernelTable& active();

// Pins the dispatch for tests and benchmarks. Throws ConfigError if the ISA is
// not supported by the CPU.
void force_isa(Isa isa);
void reset_isa();

std::string_view isa_name(Isa isa);

inline void add(std::uint64_t* d, const std::uint64_t* a, const std::uint64_t* b, std::size_t n) { active().add(d, a, b, n); }
inline void sub(std::uint64_t* d, const std::uint64_t* a, const std::uint64_t* b, std::size_t n) { active().sub(d, a, b, n); }
inline void mul(std::uint64_t* d, const std::uint64_t* a, const std::uint64_t* b, std::size_t n) { active().mul(d, a, b, n); }
inline void axpy(std::uint64_t* d, std::uint64_t s, const std::uint64_t* x, std::size_t n) { active().axpy(d, s, x, n); }
inline void scale(std::uint64_t* d, std::uint64_t s, const std::uint64_t* x, std::size_t n) { active().scale(d, s, x, n); }

}  // namespace sgnn::kernels
