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

#include <immintrin.h>

#include "sgnn/field/field.h"
#include "sgnn/kernels/modq.h"

namespace sgnn::kernels {
namespace {

inline __m256i load(const std::uint64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(std::uint64_t* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

// x < 2^62 -> x mod q. Lanes are non-negative as signed, so the signed
// compare is safe.
inline __m256i cond_sub_q(__m256i x) {
  const __m256i q = _mm256_set1_epi64x(static_cast<long long>(kModulus));
  const __m256i qm1 = _mm256_set1_epi64x(static_cast<long long>(kModulus - 1));
  const __m256i ge = _mm256_cmpgt_epi64(x, qm1);
  return _mm256_sub_epi64(x, _mm256_and_si256(ge, q));
}

inline __m256i fold(__m256i x) {
  const __m256i m = _mm256_set1_epi64x(static_cast<long long>(kModulus));
  return _mm256_add_epi64(_mm256_and_si256(x, m), _mm256_srli_epi64(x, 61));
}

// a, b < 2^61. Split into 32-bit limbs: a = ah*2^32 + al with ah < 2^29.
// 2^64 = 8 and 2^61 = 1 mod q.
inline __m256i mulmod(__m256i a, __m256i b) {
  const __m256i mask29 = _mm256_set1_epi64x((1LL << 29) - 1);
  const __m256i ah = _mm256_srli_epi64(a, 32);
  const __m256i bh = _mm256_srli_epi64(b, 32);
  const __m256i ll = _mm256_mul_epu32(a, b);
  const __m256i hh = _mm256_mul_epu32(ah, bh);
  const __m256i mid = _mm256_add_epi64(_mm256_mul_epu32(ah, b), _mm256_mul_epu32(a, bh));
  __m256i acc = _mm256_slli_epi64(hh, 3);
  acc = _mm256_add_epi64(acc, _mm256_srli_epi64(mid, 29));
  acc = _mm256_add_epi64(acc, _mm256_slli_epi64(_mm256_and_si256(mid, mask29), 32));
  acc = _mm256_add_epi64(acc, fold(ll));
  return cond_sub_q(fold(acc));
}

void add_avx2(std::uint64_t* d, const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(d + i, cond_sub_q(_mm256_add_epi64(load(a + i), load(b + i))));
  for (; i < n; ++i) d[i] = field::add(a[i], b[i]);
}

void sub_avx2(std::uint64_t* d, const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  const __m256i q = _mm256_set1_epi64x(static_cast<long long>(kModulus));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i t = _mm256_sub_epi64(_mm256_add_epi64(load(a + i), q), load(b + i));
    store(d + i, cond_sub_q(t));
  }
  for (; i < n; ++i) d[i] = field::sub(a[i], b[i]);
}

void mul_avx2(std::uint64_t* d, const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(d + i, mulmod(load(a + i), load(b + i)));
  for (; i < n; ++i) d[i] = field::mul(a[i], b[i]);
}

void axpy_avx2(std::uint64_t* d, std::uint64_t s, const std::uint64_t* x, std::size_t n) {
  const __m256i sv = _mm256_set1_epi64x(static_cast<long long>(s));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    store(d + i, cond_sub_q(_mm256_add_epi64(load(d + i), mulmod(sv, load(x + i)))));
  }
  for (; i < n; ++i) d[i] = field::add(d[i], field::mul(s, x[i]));
}

void scale_avx2(std::uint64_t* d, std::uint64_t s, const std::uint64_t* x, std::size_t n) {
  const __m256i sv = _mm256_set1_epi64x(static_cast<long long>(s));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(d + i, mulmod(sv, load(x + i)));
  for (; i < n; ++i) d[i] = field::mul(s, x[i]);
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{Isa::kAvx2, add_avx2, sub_avx2,
                                 mul_avx2,   axpy_avx2, scale_avx2};
  return table;
}

}  // namespace sgnn::kernels
