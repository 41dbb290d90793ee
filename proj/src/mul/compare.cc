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

#include "sgnn/mul/compare.h"

#include "sgnn/field/field.h"
#include "sgnn/mul/beaver.h"

namespace sgnn {
namespace {
constexpr std::uint64_t kInvTwo = (kModulus + 1) / 2;
}  // namespace

std::uint64_t compare_finish(std::uint64_t y, std::uint64_t s_share, bool leader) {
  // bit = (1 + sign(y) * s) / 2. y == 0 only when x == 0, which is not
  // positive whatever s is.
  if (y == 0) return 0;
  const bool positive = field::to_signed(y) > 0;
  std::uint64_t v = positive ? s_share : field::neg(s_share);
  if (leader) v = field::add(v, 1);
  return field::mul(v, kInvTwo);
}

std::vector<std::uint64_t> compare_gtz(Session& session, std::span<const std::uint64_t> x,
                                       ComparePool& pool, const std::string& consumer) {
  const std::size_t n = x.size();
  const std::uint64_t begin = pool.cursor.take(n, pool.size(), consumer);
  std::span<const std::uint64_t> st(pool.st.data() + begin, n);
  const auto y_share = beaver_multiply(session, st, x, pool.triples, begin);
  const auto y = session.open_sum(Tag::kBeaverOpen, y_share);
  const bool leader = session.party() == 0;
  std::vector<std::uint64_t> bit(n);
  for (std::size_t i = 0; i < n; ++i) bit[i] = compare_finish(y[i], pool.s[begin + i], leader);
  return bit;
}

}  // namespace sgnn
