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

#include <gtest/gtest.h>

#include <set>

#include "sgnn/field/field.h"
#include "sgnn/field/prf.h"

namespace sgnn {
namespace {

TEST(Prf, DeterministicAndSeparated) {
  const SeededPrf a = SeededPrf::from_u64(1), b = SeededPrf::from_u64(1), c = SeededPrf::from_u64(2);
  const StreamId id{1, 2, 3, 4, 5};
  EXPECT_EQ(a.element(id, 10), b.element(id, 10));
  EXPECT_NE(a.element(id, 10), c.element(id, 10));
  EXPECT_NE(a.element(id, 10), a.element({1, 2, 3, 4, 6}, 10));
  EXPECT_NE(a.element(id, 10), a.element({1, 2, 3, 5, 5}, 10));
  EXPECT_NE(a.element(id, 10), a.element(id, 11));
}

TEST(Prf, RandomAccessMatchesPrefix) {
  const SeededPrf p = SeededPrf::from_u64(7);
  const StreamId id{3, 0, 0, 0, 9};
  std::vector<std::uint64_t> all(100), part(17);
  p.fill(id, 0, all.data(), all.size());
  p.fill(id, 41, part.data(), part.size());
  for (std::size_t i = 0; i < part.size(); ++i) EXPECT_EQ(part[i], all[41 + i]);
  for (auto v : all) EXPECT_LT(v, kModulus);
  const Matrix m = p.matrix(id, 10, 10);
  EXPECT_EQ(m.values(), all);
  EXPECT_EQ(prf_matrix(p, 9, 10, 10), p.matrix({0, 0, 0, 0, 9}, 10, 10));
}

TEST(Prf, BelowAndNonzero) {
  const SeededPrf p = SeededPrf::from_u64(8);
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const std::uint64_t v = p.below({5, 0, 0, 0, i}, 7);
    EXPECT_LT(v, 7u);
    seen.insert(v);
    EXPECT_NE(p.nonzero({6, 0, 0, 0, 0}, i), 0u);
  }
  EXPECT_EQ(seen.size(), 7u);
}

TEST(Prf, DeriveSeed) {
  const Seed m = SeededPrf::from_u64(1).seed();
  EXPECT_EQ(derive_seed(m, "x", 1), derive_seed(m, "x", 1));
  EXPECT_NE(derive_seed(m, "x", 1), derive_seed(m, "x", 2));
  EXPECT_NE(derive_seed(m, "x", 1), derive_seed(m, "y", 1));
  EXPECT_EQ(seed_hex(m).size(), 64u);
}

}  // namespace
}  // namespace sgnn
