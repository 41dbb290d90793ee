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

#include "sgnn/field/field.h"
#include "sgnn/kernels/modq.h"

namespace sgnn::kernels {
namespace {

void add_scalar(std::uint64_t* d, const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) d[i] = field::add(a[i], b[i]);
}

void sub_scalar(std::uint64_t* d, const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) d[i] = field::sub(a[i], b[i]);
}

void mul_scalar(std::uint64_t* d, const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) d[i] = field::mul(a[i], b[i]);
}

void axpy_scalar(std::uint64_t* d, std::uint64_t s, const std::uint64_t* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) d[i] = field::add(d[i], field::mul(s, x[i]));
}

void scale_scalar(std::uint64_t* d, std::uint64_t s, const std::uint64_t* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) d[i] = field::mul(s, x[i]);
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::kScalar, add_scalar, sub_scalar,
                                 mul_scalar,   axpy_scalar, scale_scalar};
  return table;
}

}  // namespace sgnn::kernels
