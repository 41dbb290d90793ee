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

#include "sgnn/mul/mtoa.h"

#include "sgnn/common/errors.h"

namespace sgnn {

std::vector<std::uint64_t> m_to_a(Session& session, std::span<const std::uint64_t> w_mul,
                                  AMPool& pool, const std::string& consumer) {
  const std::size_t n = w_mul.size();
  const std::uint64_t begin = pool.cursor.take(n, pool.size(), consumer);
  std::vector<std::uint64_t> alpha(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (w_mul[i] == 0) throw ProtocolError("m_to_a: zero multiplicative share");
    alpha[i] = pool.mul[begin + i];
  }
  field::batch_inverse(alpha.data(), n);
  for (std::size_t i = 0; i < n; ++i) alpha[i] = field::mul(w_mul[i], alpha[i]);
  const auto opened = session.open_product(Tag::kAlphaOpen, alpha);
  std::vector<std::uint64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = mtoa_finish<PrimeField>(opened[i], pool.add[begin + i]);
  }
  return out;
}

}  // namespace sgnn
