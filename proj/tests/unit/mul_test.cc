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
#include "sgnn/mul/beaver.h"
#include "sgnn/mul/compare.h"
#include "sgnn/mul/mtoa.h"
#include "sgnn/mul/rand_comb.h"
#include "sgnn/mul/truncate.h"
#include "sgnn/provider/dealer.h"
#include "test_util.h"

namespace sgnn {
namespace {

using testing::Gen;
using testing::run_loopback;

// AM pairs dealt directly from a known R, as the oracle for m_to_a.
std::vector<AMPool> deal_am(int parties, std::size_t n, std::uint64_t seed) {
  Gen g(seed);
  const SeededPrf rng = SeededPrf::from_u64(seed);
  std::vector<AMPool> out(parties);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t r = g.nonzero();
    const auto a = split_scalar(r, parties, rng, {1, 0, 0, 0, 0}, i);
    const auto m = split_multiplicative(r, parties, rng, {2, 0, 0, 0, 0}, i);
    for (int p = 0; p < parties; ++p) {
      out[p].add.push_back(a[p]);
      out[p].mul.push_back(m[p]);
    }
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> split_each(const std::vector<std::uint64_t>& v,
                                                   int parties, std::uint64_t seed) {
  const SeededPrf rng = SeededPrf::from_u64(seed);
  std::vector<std::vector<std::uint64_t>> out(parties, std::vector<std::uint64_t>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto s = split_scalar(v[i], parties, rng, {3, 0, 0, 0, 0}, i);
    for (int p = 0; p < parties; ++p) out[p][i] = s[p];
  }
  return out;
}

std::vector<std::uint64_t> open_all(const std::vector<std::vector<std::uint64_t>>& shares) {
  std::vector<std::uint64_t> out(shares.front().size(), 0);
  for (const auto& s : shares) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field::add(out[i], s[i]);
  }
  return out;
}

TEST(MtoA, ConvertsMultiplicativeShares) {
  for (int parties : {2, 3, 5}) {
    Gen g(parties);
    const std::size_t n = 500;
    std::vector<std::uint64_t> w(n);
    for (auto& x : w) x = g.nonzero();
    const SeededPrf rng = SeededPrf::from_u64(9);
    std::vector<std::vector<std::uint64_t>> wm(parties, std::vector<std::uint64_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      const auto s = split_multiplicative(w[i], parties, rng, {4, 0, 0, 0, 0}, i);
      for (int p = 0; p < parties; ++p) wm[p][i] = s[p];
    }
    auto pools = deal_am(parties, n, 10 + parties);
    std::vector<std::vector<std::uint64_t>> out(parties);
    const auto ts = run_loopback(parties, [&](Session& s) {
      out[s.party()] = m_to_a(s, wm[s.party()], pools[s.party()], "test");
    });
    EXPECT_EQ(open_all(out), w);
    EXPECT_EQ(ts[0].rounds(), 1u);
    EXPECT_EQ(pools[0].cursor.position(), n);
  }
}

TEST(MtoA, PoolExhaustion) {
  auto pools = deal_am(2, 3, 1);
  EXPECT_THROW(run_loopback(2,
                            [&](Session& s) {
                              const std::vector<std::uint64_t> w(4, 1);
                              m_to_a(s, w, pools[s.party()], "too many");
                            }),
               ProtocolError);
}

TEST(Beaver, LocalTriplesConvertAndMultiply) {
  const int parties = 3;
  const std::size_t n = 200;
  auto pools = deal_am(parties, 3 * n, 21);
  Gen g(22);
  std::vector<std::uint64_t> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = g.element();
    y[i] = g.element();
  }
  const auto xs = split_each(x, parties, 1), ys = split_each(y, parties, 2);
  std::vector<std::vector<std::uint64_t>> z(parties);
  std::vector<ScalarTriples> trip(parties);
  const auto ts = run_loopback(parties, [&](Session& s) {
    const int p = s.party();
    const MulBeaverTriples m = beaver_m(SeededPrf::from_u64(100 + p), 5, n);
    trip[p] = beaver_m_to_a(s, m, pools[p], "triples");
    z[p] = beaver_multiply(s, xs[p], ys[p], trip[p], 0);
  });
  EXPECT_EQ(ts[0].rounds(), 2u);
  const auto zz = open_all(z);
  for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(zz[i], field::mul(x[i], y[i]));
  std::vector<std::vector<std::uint64_t>> a(parties), b(parties), c(parties);
  for (int p = 0; p < parties; ++p) {
    a[p] = trip[p].a;
    b[p] = trip[p].b;
    c[p] = trip[p].c;
  }
  const auto A = open_all(a), B = open_all(b), C = open_all(c);
  for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(field::mul(A[i], B[i]), C[i]);
}

TEST(RandComb, PreservesTripleRelation) {
  const int parties = 2;
  const Dealer d(SeededPrf::from_u64(30).seed(), parties);
  const auto t = d.beaver_matrix(1, 0, 8, 3, 2);
  for (std::uint64_t nonce = 0; nonce < 20; ++nonce) {
    std::vector<Matrix> a, b, c;
    for (const auto& x : t) {
      const DerivedTriple dt = rand_comb(x, 5, nonce);
      a.push_back(dt.a);
      b.push_back(*dt.b);
      c.push_back(dt.c);
    }
    EXPECT_EQ(matmul(reconstruct_additive(a), reconstruct_additive(b)), reconstruct_additive(c));
  }
  EXPECT_EQ(rand_comb_coefficients(7, 1, 3, 8), rand_comb_coefficients(7, 1, 3, 8));
  EXPECT_NE(rand_comb_coefficients(7, 1, 3, 8), rand_comb_coefficients(7, 2, 3, 8));
  EXPECT_THROW(rand_comb(t[0], 9, 0), ConfigError);
}

TEST(RandComb, GuardRefusesReuse) {
  TripleGuard g;
  g.claim(1, 1);
  g.claim(1, 2);
  g.claim(2, 1);
  EXPECT_THROW(g.claim(1, 1), ReuseError);
  EXPECT_EQ(g.claimed(), 3u);
}

TEST(MatMul, CachesVAndMatchesProduct) {
  const int parties = 3;
  const Dealer d(SeededPrf::from_u64(31).seed(), parties);
  const auto t = d.beaver_matrix(0, 0, 10, 4, 3);
  Gen g(32);
  const Matrix h = g.matrix(4, 3);
  const auto hs = split_additive(h, parties, SeededPrf::from_u64(33));
  std::vector<VCache> caches(parties);
  std::vector<TripleGuard> guards(parties);
  for (std::uint64_t nonce = 0; nonce < 3; ++nonce) {
    const Matrix x = g.matrix(6, 4);
    const auto xs = split_additive(x, parties, SeededPrf::from_u64(34 + nonce));
    std::vector<MatMulOutput> out(parties);
    const auto ts = run_loopback(parties, [&](Session& s) {
      const int p = s.party();
      const DerivedTriple dt = rand_comb(t[p], 6, nonce);
      out[p] = mat_mul(s, xs[p], hs[p], dt, caches[p], {0, 0, 1}, guards[p]);
    });
    std::vector<Matrix> z;
    for (const auto& o : out) z.push_back(o.z);
    EXPECT_EQ(reconstruct_additive(z), matmul(x, h));
    EXPECT_EQ(ts[0].rounds(), 1u);
    EXPECT_EQ(out[0].v_cached, nonce > 0);
  }
}

TEST(Truncate, ErrorBelowOneUlp) {
  const int parties = 3;
  const int f = 16;
  const FixedPointCodec codec(f);
  const std::size_t n = 2000;
  Gen g(40);
  std::vector<std::uint64_t> x(n);
  std::vector<double> want(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = g.real(-100, 100), b = g.real(-100, 100);
    x[i] = field::mul(codec.encode(a), codec.encode(b));
    want[i] = static_cast<double>(field::to_signed(x[i])) / std::ldexp(1.0, 2 * f);
  }
  x[0] = 0;
  want[0] = 0;
  const auto xs = split_each(x, parties, 41);
  const Dealer d(SeededPrf::from_u64(42).seed(), parties);
  auto pools = d.truncation(1, n, f);
  std::vector<std::vector<std::uint64_t>> out(parties);
  run_loopback(parties, [&](Session& s) {
    out[s.party()] = truncate(s, xs[s.party()], pools[s.party()], "t");
  });
  const auto y = open_all(out);
  EXPECT_EQ(y[0], 0u);
  for (std::size_t i = 0; i < n; ++i) {
    ASSERT_LT(std::abs(codec.decode(y[i]) - want[i]), codec.ulp()) << i;
  }
}

TEST(Compare, SignBitsAreExact) {
  const int parties = 3;
  const std::size_t n = 1000;
  Gen g(50);
  std::vector<std::uint64_t> x(n);
  std::vector<std::uint64_t> want(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t v = i < 3 ? static_cast<std::int64_t>(i) - 1
                                 : g.range(-(std::int64_t{1} << 38), std::int64_t{1} << 38);
    x[i] = field::from_signed(v);
    want[i] = v > 0 ? 1 : 0;
  }
  const auto xs = split_each(x, parties, 51);
  const Dealer d(SeededPrf::from_u64(52).seed(), parties);
  auto pools = d.compare(1, n);
  std::vector<std::vector<std::uint64_t>> out(parties);
  const auto ts = run_loopback(parties, [&](Session& s) {
    out[s.party()] = compare_gtz(s, xs[s.party()], pools[s.party()], "cmp");
  });
  EXPECT_EQ(open_all(out), want);
  EXPECT_EQ(ts[0].rounds(), 2u);
}

}  // namespace
}  // namespace sgnn
