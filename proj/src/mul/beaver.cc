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

#include "sgnn/mul/beaver.h"

#include "sgnn/common/errors.h"
#include "sgnn/mul/mtoa.h"

namespace sgnn {
namespace {
constexpr std::uint32_t kBeaverMStream = 0x300;
}  // namespace

MulBeaverTriples beaver_m(const SeededPrf& local, std::uint64_t nonce, std::size_t count) {
  MulBeaverTriples t;
  t.a.resize(count);
  t.b.resize(count);
  t.c.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    t.a[i] = local.nonzero({kBeaverMStream, 0, 0, 0, nonce}, i);
    t.b[i] = local.nonzero({kBeaverMStream, 1, 0, 0, nonce}, i);
    t.c[i] = field::mul(t.a[i], t.b[i]);
  }
  return t;
}

ScalarTriples beaver_m_to_a(Session& session, const MulBeaverTriples& m, AMPool& pool,
                            const std::string& consumer) {
  const std::size_t n = m.size();
  std::vector<std::uint64_t> all;
  all.reserve(3 * n);
  all.insert(all.end(), m.a.begin(), m.a.end());
  all.insert(all.end(), m.b.begin(), m.b.end());
  all.insert(all.end(), m.c.begin(), m.c.end());
  auto add = m_to_a(session, all, pool, consumer);
  ScalarTriples out;
  out.a.assign(add.begin(), add.begin() + n);
  out.b.assign(add.begin() + n, add.begin() + 2 * n);
  out.c.assign(add.begin() + 2 * n, add.end());
  return out;
}

std::vector<std::uint64_t> beaver_multiply(Session& session, std::span<const std::uint64_t> x,
                                           std::span<const std::uint64_t> y,
                                           const ScalarTriples& t, std::uint64_t begin) {
  const std::size_t n = x.size();
  if (y.size() != n) throw ShapeError("beaver_multiply: length mismatch");
  if (begin + n > t.size()) throw PoolExhausted("beaver_multiply: not enough triples");
  std::vector<std::uint64_t> de(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    de[i] = field::sub(x[i], t.a[begin + i]);
    de[n + i] = field::sub(y[i], t.b[begin + i]);
  }
  const auto opened = session.open_sum(Tag::kBeaverOpen, de);
  const bool leader = session.party() == 0;
  std::vector<std::uint64_t> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    z[i] = beaver_combine(opened[i], opened[n + i], t.a[begin + i], t.b[begin + i],
                          t.c[begin + i], leader);
  }
  return z;
}

Matrix elem_mul(Session& session, const Matrix& x, const Matrix& y, TripleStore& store,
                const std::string& consumer) {
  require_same_shape(x, y, "elem_mul");
  const std::uint64_t begin = store.take(x.size(), consumer);
  auto z = beaver_multiply(session, x.values(), y.values(), store.triples(), begin);
  return Matrix(x.rows(), x.cols(), std::move(z));
}

}  // namespace sgnn
