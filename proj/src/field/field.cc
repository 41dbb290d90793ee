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

#include <vector>

#include "sgnn/common/errors.h"

namespace sgnn {

std::uint64_t inverse_mod(std::uint64_t x, std::uint64_t m) {
  if (m < 2) throw ConfigError("inverse_mod: modulus must be >= 2");
  x %= m;
  if (x == 0) throw ConfigError("inverse_mod: zero has no inverse");
  // Track only the coefficient of x; signed 128-bit keeps it exact.
  __int128 r0 = m, r1 = x;
  __int128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    const __int128 quot = r0 / r1;
    const __int128 r2 = r0 - quot * r1;
    r0 = r1;
    r1 = r2;
    const __int128 t2 = t0 - quot * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw ConfigError("inverse_mod: element not invertible");
  if (t0 < 0) t0 += m;
  return static_cast<std::uint64_t>(t0);
}

namespace field {

std::uint64_t pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  base = reduce(base);
  while (exp) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inverse(std::uint64_t x) {
  if (reduce(x) == 0) throw ConfigError("mul_inverse: zero input");
  return inverse_mod(reduce(x), kModulus);
}

void batch_inverse(std::uint64_t* values, std::size_t n) {
  if (n == 0) return;
  std::vector<std::uint64_t> prefix(n);
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i] == 0) throw ConfigError("batch_inverse: zero input");
    prefix[i] = acc;
    acc = mul(acc, values[i]);
  }
  std::uint64_t inv = inverse(acc);
  for (std::size_t i = n; i-- > 0;) {
    const std::uint64_t v = values[i];
    values[i] = mul(inv, prefix[i]);
    inv = mul(inv, v);
  }
}

}  // namespace field
}  // namespace sgnn
