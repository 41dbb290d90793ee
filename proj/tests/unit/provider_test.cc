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

#include "sgnn/common/errors.h"
#include "sgnn/field/field.h"
#include "sgnn/field/sharing.h"
#include "sgnn/provider/dealer.h"
#include "sgnn/provider/msas.h"
#include "sgnn/provider/offline_store.h"
#include "test_util.h"

namespace sgnn {
namespace {

using testing::run_loopback;

std::uint64_t sum_at(const std::vector<std::vector<std::uint64_t>>& v, std::size_t i) {
  std::uint64_t s = 0;
  for (const auto& p : v) s = field::add(s, p[i]);
  return s;
}

TEST(Dealer, MatrixTriplesSatisfyAB) {
  for (int parties : {2, 3, 5}) {
    const Dealer d(SeededPrf::from_u64(1).seed(), parties);
    const auto t = d.beaver_matrix(4, 2, 6, 3, 5);
    std::vector<Matrix> a, b, c;
    for (const auto& x : t) {
      EXPECT_EQ(x.id, (std::uint64_t{4} << 32) | 2);
      a.push_back(x.a);
      b.push_back(x.b);
      c.push_back(x.c);
    }
    EXPECT_EQ(matmul(reconstruct_additive(a), reconstruct_additive(b)), reconstruct_additive(c));
    EXPECT_EQ(reconstruct_additive(a).rows(), 6u);
  }
}

TEST(Dealer, ScalarTruncationCompare) {
  const int parties = 3;
  const Dealer d(SeededPrf::from_u64(2).seed(), parties);
  const auto st = d.scalar_triples(1, 200);
  const auto tp = d.truncation(2, 200, 16);
  const auto cp = d.compare(3, 200);
  for (std::size_t i = 0; i < 200; ++i) {
    std::uint64_t a = 0, b = 0, c = 0, r = 0, rh = 0, s = 0, sts = 0;
    for (int p = 0; p < parties; ++p) {
      a = field::add(a, st[p].a[i]);
      b = field::add(b, st[p].b[i]);
      c = field::add(c, st[p].c[i]);
      r = field::add(r, tp[p].r[i]);
      rh = field::add(rh, tp[p].r_hi[i]);
      s = field::add(s, cp[p].s[i]);
      sts = field::add(sts, cp[p].st[i]);
    }
    EXPECT_EQ(field::mul(a, b), c);
    EXPECT_LT(r, std::uint64_t{1} << kTruncationMaskBits);
    EXPECT_EQ(rh, r >> 16);
    EXPECT_TRUE(s == 1 || s == kModulus - 1);
    const std::int64_t t = field::to_signed(field::mul(s, sts));
    EXPECT_GE(t, 1);
    EXPECT_LT(t, std::int64_t{1} << kCompareMaskBits);
  }
}

TEST(Msas, PairsMatchAcrossRepresentations) {
  for (int parties : {2, 3, 5}) {
    const Dealer d(SeededPrf::from_u64(3).seed(), parties);
    const std::size_t k = 300;
    const auto material = d.msas_material(7, k);
    std::vector<AMPool> pools(parties);
    const auto ts = run_loopback(parties, [&](Session& s) {
      pools[s.party()] = msas_pair_batch(s, material[s.party()]);
    });
    EXPECT_EQ(ts[0].rounds(), static_cast<std::uint64_t>(parties - 2));
    for (std::size_t i = 0; i < k; ++i) {
      std::uint64_t add = 0, mul = 1;
      for (int p = 0; p < parties; ++p) {
        add = field::add(add, pools[p].add[i]);
        mul = field::mul(mul, pools[p].mul[i]);
        EXPECT_NE(pools[p].mul[i], 0u);
      }
      EXPECT_EQ(add, mul);
      EXPECT_NE(add, 0u);
    }
  }
}

TEST(Msas, LinkSharesMultiplyToLinkSums) {
  const int parties = 4;
  const Dealer d(SeededPrf::from_u64(4).seed(), parties);
  const auto m = d.msas_material(1, 50);
  ASSERT_EQ(m[0].link_add.size(), static_cast<std::size_t>(parties - 1));
  for (std::size_t link = 0; link + 1 < static_cast<std::size_t>(parties); ++link) {
    for (std::size_t i = 0; i < 50; ++i) {
      std::uint64_t add = 0, mul = 1;
      for (int p = 0; p < parties; ++p) {
        add = field::add(add, m[p].link_add[link][i]);
        mul = field::mul(mul, m[p].link_mul[link][i]);
        const bool inside = p == static_cast<int>(link) || p == static_cast<int>(link) + 1;
        if (!inside) {
          EXPECT_EQ(m[p].link_add[link][i], 0u);
          EXPECT_EQ(m[p].link_mul[link][i], 1u);
        }
      }
      EXPECT_EQ(add, mul);
    }
  }
}

TEST(Pools, CursorNeverRewinds) {
  PoolCursor c("demo");
  EXPECT_EQ(c.take(3, 10, "a"), 0u);
  EXPECT_EQ(c.take(5, 10, "b"), 3u);
  EXPECT_THROW(c.take(3, 10, "c"), PoolExhausted);
  EXPECT_EQ(c.position(), 8u);
  ASSERT_EQ(c.audit().size(), 2u);
  EXPECT_EQ(c.audit()[1].consumer, "b");
  EXPECT_EQ(c.audit()[1].begin, 3u);
}

PartyOffline sample_offline() {
  const Dealer d(SeededPrf::from_u64(5).seed(), 2);
  PartyOffline off;
  off.client_id = 3;
  off.party = 1;
  off.parties = 2;
  off.n_max = 5;
  off.local_seed = SeededPrf::from_u64(6).seed();
  off.matrix_triples[0] = d.beaver_matrix(3, 0, 5, 2, 3)[1];
  off.matrix_triples[1] = d.beaver_matrix(3, 1, 5, 3, 1)[1];
  off.truncation = d.truncation(1, 11, 16)[1];
  off.compare = d.compare(2, 13)[1];
  off.am.add = {1, 2, 3, 4};
  off.am.mul = {5, 6, 7, 8};
  off.am.cursor.take(2, 4, "earlier");
  return off;
}

TEST(OfflineStore, ReloadIsByteIdentical) {
  const PartyOffline off = sample_offline();
  const Bytes a = serialize_offline(off);
  const PartyOffline back = deserialize_offline(a);
  EXPECT_EQ(serialize_offline(back), a);
  EXPECT_EQ(back.am.cursor.position(), 2u);
  EXPECT_EQ(back.matrix_triples.at(1).b, off.matrix_triples.at(1).b);
  EXPECT_EQ(back.local_seed, off.local_seed);
  PartyOffline again = back;
  EXPECT_THROW(again.am.cursor.take(3, again.am.size(), "x"), PoolExhausted);
}

TEST(OfflineStore, RejectsCorruptFiles) {
  Bytes a = serialize_offline(sample_offline());
  Bytes bad_magic = a;
  bad_magic[0] = 'X';
  EXPECT_THROW(deserialize_offline(bad_magic), Error);
  EXPECT_THROW(deserialize_offline(Bytes(a.begin(), a.begin() + a.size() / 2)), Error);
}

}  // namespace
}  // namespace sgnn
