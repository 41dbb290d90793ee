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

#include <cmath>

#include "sgnn/common/errors.h"
#include "sgnn/field/field.h"
#include "sgnn/field/fixed_point.h"
#include "sgnn/field/sharing.h"
#include "sgnn/mul/mtoa.h"
#include "test_util.h"

namespace sgnn {
namespace {

using testing::Gen;

// Independent oracle: plain 128-bit remainder.
std::uint64_t ref_mul(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kModulus);
}

TEST(Field, OpsMatchWideArithmetic) {
  Gen g(1);
  for (int i = 0; i < 20000; ++i) {
    const std::uint64_t a = g.element(), b = g.element();
    EXPECT_EQ(field::add(a, b), (a + b) % kModulus);
    EXPECT_EQ(field::sub(a, b), (a + kModulus - b) % kModulus);
    EXPECT_EQ(field::mul(a, b), ref_mul(a, b));
    EXPECT_EQ(field::add(a, field::neg(a)), 0u);
  }
}

TEST(Field, ReduceCoversFullWord) {
  Gen g(2);
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t x = g.u64();
    EXPECT_EQ(field::reduce(x), x % kModulus);
  }
  EXPECT_EQ(field::reduce(kModulus), 0u);
  EXPECT_EQ(field::reduce(~std::uint64_t{0}), ~std::uint64_t{0} % kModulus);
}

TEST(Field, InverseAndBatchInverse) {
  Gen g(3);
  std::vector<std::uint64_t> v(257), orig;
  for (auto& x : v) x = g.nonzero();
  orig = v;
  field::batch_inverse(v.data(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    EXPECT_EQ(field::mul(v[i], orig[i]), 1u);
    EXPECT_EQ(v[i], field::inverse(orig[i]));
    EXPECT_EQ(v[i], field::pow(orig[i], kModulus - 2));
  }
  EXPECT_THROW(field::inverse(0), Error);
}

TEST(Field, InverseModSmallModuli) {
  EXPECT_EQ(inverse_mod(4, 101), 76u);
  EXPECT_EQ(inverse_mod(3, 7), 5u);
  EXPECT_THROW(inverse_mod(6, 9), ConfigError);
  for (std::uint64_t x = 1; x < 101; ++x) EXPECT_EQ(x * inverse_mod(x, 101) % 101, 1u);
}

TEST(Field, SignedRoundTrip) {
  for (std::int64_t v : {0L, 1L, -1L, 123456789L, -987654321L, (1L << 59), -(1L << 59)}) {
    EXPECT_EQ(field::to_signed(field::from_signed(v)), v);
  }
  EXPECT_EQ(field::from_signed(-1), kModulus - 1);
}

// W = 6 = 2 * 3 multiplicatively, R = 4 = 2 * 2 multiplicatively and 1 + 3
// additively, in Z_101: alpha = 6 / 4 = 52 and 52 * (1 + 3) = 6.
TEST(Field, MtoaLocalStepsInZ101) {
  using F = SmallField<101>;
  const std::uint64_t a0 = mtoa_alpha_share<F>(2, 2);
  const std::uint64_t a1 = mtoa_alpha_share<F>(3, 2);
  const std::uint64_t alpha = F::mul(a0, a1);
  EXPECT_EQ(alpha, 52u);
  const std::uint64_t w0 = mtoa_finish<F>(alpha, 1);
  const std::uint64_t w1 = mtoa_finish<F>(alpha, 3);
  EXPECT_EQ(w0, 52u);
  EXPECT_EQ(w1, 55u);
  EXPECT_EQ(F::add(w0, w1), 6u);
}

TEST(FixedPoint, EncodeDecode) {
  const FixedPointCodec c(16);
  EXPECT_EQ(c.encode(1.0), 65536u);
  EXPECT_EQ(c.encode(-1.0), kModulus - 65536);
  EXPECT_DOUBLE_EQ(c.decode(c.encode(-2.5)), -2.5);
  EXPECT_DOUBLE_EQ(c.decode_double_scale(field::mul(c.encode(1.5), c.encode(-2.0))), -3.0);
  Gen g(4);
  for (int i = 0; i < 1000; ++i) {
    const double x = g.real(-1000, 1000);
    EXPECT_LE(std::abs(c.decode(c.encode(x)) - x), 0.5 * c.ulp());
  }
}

TEST(FixedPoint, RejectsOutOfRange) {
  const FixedPointCodec c(16);
  EXPECT_THROW(c.encode(std::ldexp(1.0, 44)), ConfigError);
  EXPECT_THROW(c.encode(std::nan("")), ConfigError);
  EXPECT_NO_THROW(c.encode(std::ldexp(1.0, 43)));
  EXPECT_THROW(FixedPointCodec(29), ConfigError);
  EXPECT_THROW(FixedPointCodec(-1), ConfigError);
}

TEST(Sharing, AdditiveAndMultiplicative) {
  Gen g(5);
  const SeededPrf rng = SeededPrf::from_u64(5);
  for (int parties : {2, 3, 5}) {
    const Matrix secret = g.matrix(4, 3);
    const auto shares = split_additive(secret, parties, rng, {9, 1, 0, 0, 0});
    ASSERT_EQ(shares.size(), static_cast<std::size_t>(parties));
    EXPECT_EQ(reconstruct_additive(shares), secret);
    EXPECT_NE(shares[0], secret);
    for (int i = 0; i < 100; ++i) {
      const std::uint64_t s = g.nonzero();
      const auto m = split_multiplicative(s, parties, rng, {9, 2, 0, 0, 0}, i);
      for (auto x : m) EXPECT_NE(x, 0u);
      EXPECT_EQ(reconstruct_multiplicative(m), s);
      const std::uint64_t n = 1 + g.below(500);
      const std::uint64_t idx = g.below(n);
      const auto is = split_index(idx, n, parties, rng, {9, 3, 0, 0, static_cast<std::uint64_t>(i)});
      std::uint64_t sum = 0;
      for (auto x : is) {
        EXPECT_LT(x, n);
        sum += x;
      }
      EXPECT_EQ(sum % n, idx);
    }
  }
}

}  // namespace
}  // namespace sgnn
