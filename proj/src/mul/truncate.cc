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

#include "sgnn/mul/truncate.h"

#include <algorithm>

#include "sgnn/common/errors.h"
#include "sgnn/field/field.h"
#include "sgnn/provider/dealer.h"

namespace sgnn {

int truncation_headroom_bits(int fraction_bits) {
  // c = x + 2^b + r must stay below q: 2^(b+1) + 2^59 < 2^61.
  return std::min(2 * fraction_bits + 14, 59);
}

std::uint64_t truncate_finish(std::uint64_t opened, std::uint64_t r_hi_share, int fraction_bits,
                              bool leader) {
  const int b = truncation_headroom_bits(fraction_bits);
  std::uint64_t out = field::neg(r_hi_share);
  if (leader) {
    const auto shifted = static_cast<std::int64_t>(opened >> fraction_bits) -
                         (std::int64_t{1} << (b - fraction_bits));
    out = field::add(out, field::from_signed(shifted));
  }
  return out;
}

std::vector<std::uint64_t> truncate(Session& session, std::span<const std::uint64_t> x,
                                    TruncationPool& pool, const std::string& consumer) {
  const std::size_t n = x.size();
  const int f = pool.fraction_bits;
  const int b = truncation_headroom_bits(f);
  const std::uint64_t begin = pool.cursor.take(n, pool.size(), consumer);
  const std::uint64_t offset = std::uint64_t{1} << b;
  std::vector<std::uint64_t> masked(n);
  for (std::size_t i = 0; i < n; ++i) {
    masked[i] = field::add(x[i], pool.r[begin + i]);
    if (session.party() == 0) masked[i] = field::add(masked[i], offset);
  }
  const auto opened = session.open_sum(Tag::kBeaverOpen, masked);
  const bool leader = session.party() == 0;
  std::vector<std::uint64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = truncate_finish(opened[i], pool.r_hi[begin + i], f, leader);
  }
  return out;
}

Matrix truncate(Session& session, const Matrix& x, TruncationPool& pool,
                const std::string& consumer) {
  auto v = truncate(session, x.values(), pool, consumer);
  return Matrix(x.rows(), x.cols(), std::move(v));
}

}  // namespace sgnn
