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

#include <cstdlib>

#include "sgnn/field/field.h"
#include "sgnn/kernels/modq.h"
#include "test_util.h"

namespace sgnn::kernels {
namespace {

using testing::Gen;

std::vector<std::uint64_t> draw(Gen& g, std::size_t n) {
  std::vector<std::uint64_t> v(n);
  for (auto& x : v) x = g.element();
  return v;
}

// Lengths straddle the 4-lane vector width so the scalar tails run too.
constexpr std::size_t kLengths[] = {0, 1, 3, 4, 5, 7, 8, 31, 64, 1001};

TEST(Kernels, ScalarMatchesFieldOps) {
  Gen g(11);
  const KernelTable& s = scalar_table();
  for (std::size_t n : kLengths) {
    const auto a = draw(g, n), b = draw(g, n);
    const std::uint64_t k = g.element();
    std::vector<std::uint64_t> out(n), acc = draw(g, n), acc0 = acc;
    s.add(out.data(), a.data(), b.data(), n);
    for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(out[i], field::add(a[i], b[i]));
    s.sub(out.data(), a.data(), b.data(), n);
    for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(out[i], field::sub(a[i], b[i]));
    s.mul(out.data(), a.data(), b.data(), n);
    for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(out[i], field::mul(a[i], b[i]));
    s.scale(out.data(), k, a.data(), n);
    for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(out[i], field::mul(k, a[i]));
    s.axpy(acc.data(), k, a.data(), n);
    for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(acc[i], field::add(acc0[i], field::mul(k, a[i])));
  }
}

TEST(Kernels, Avx2MatchesScalar) {
  if (!cpu_has_avx2()) GTEST_SKIP() << "no AVX2 on this machine";
  Gen g(12);
  const KernelTable& s = scalar_table();
  const KernelTable& v = avx2_table();
  for (int rep = 0; rep < 50; ++rep) {
    for (std::size_t n : kLengths) {
      const auto a = draw(g, n), b = draw(g, n);
      const std::uint64_t k = g.element();
      std::vector<std::uint64_t> x(n), y(n);
      s.add(x.data(), a.data(), b.data(), n);
      v.add(y.data(), a.data(), b.data(), n);
      ASSERT_EQ(x, y);
      s.sub(x.data(), a.data(), b.data(), n);
      v.sub(y.data(), a.data(), b.data(), n);
      ASSERT_EQ(x, y);
      s.mul(x.data(), a.data(), b.data(), n);
      v.mul(y.data(), a.data(), b.data(), n);
      ASSERT_EQ(x, y);
      s.scale(x.data(), k, a.data(), n);
      v.scale(y.data(), k, a.data(), n);
      ASSERT_EQ(x, y);
      x = b;
      y = b;
      s.axpy(x.data(), k, a.data(), n);
      v.axpy(y.data(), k, a.data(), n);
      ASSERT_EQ(x, y);
    }
  }
}

TEST(Kernels, InPlaceAliasing) {
  if (!cpu_has_avx2()) GTEST_SKIP() << "no AVX2 on this machine";
  Gen g(13);
  auto a = draw(g, 37), b = draw(g, 37);
  auto x = a, y = a;
  scalar_table().mul(x.data(), x.data(), b.data(), x.size());
  avx2_table().mul(y.data(), y.data(), b.data(), y.size());
  EXPECT_EQ(x, y);
}

TEST(Kernels, DispatchOverride) {
  force_isa(Isa::kScalar);
  EXPECT_EQ(active().isa, Isa::kScalar);
  if (cpu_has_avx2()) {
    force_isa(Isa::kAvx2);
    EXPECT_EQ(active().isa, Isa::kAvx2);
  }
  reset_isa();
  EXPECT_EQ(isa_name(Isa::kAvx2), "avx2");
}

}  // namespace
}  // namespace sgnn::kernels
