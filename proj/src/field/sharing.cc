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

#include "sgnn/field/sharing.h"

#include "sgnn/common/errors.h"
#include "sgnn/field/field.h"

namespace sgnn {

std::vector<Matrix> split_additive(const Matrix& secret, int parties, const SeededPrf& rng,
                                   StreamId stream) {
  if (parties < 2) throw ConfigError("split_additive: need at least 2 parties");
  std::vector<Matrix> shares;
  shares.reserve(parties);
  Matrix last = secret;
  for (int p = 0; p + 1 < parties; ++p) {
    StreamId id = stream;
    id.c = static_cast<std::uint32_t>(p);
    shares.push_back(rng.matrix(id, secret.rows(), secret.cols()));
    last -= shares.back();
  }
  shares.push_back(std::move(last));
  return shares;
}

Matrix reconstruct_additive(const std::vector<Matrix>& shares) {
  if (shares.empty()) throw ConfigError("reconstruct_additive: no shares");
  Matrix out = shares.front();
  for (std::size_t i = 1; i < shares.size(); ++i) {
    require_same_shape(out, shares[i], "reconstruct_additive");
    out += shares[i];
  }
  return out;
}

std::vector<std::uint64_t> split_scalar(std::uint64_t secret, int parties, const SeededPrf& rng,
                                        StreamId stream, std::uint64_t index) {
  if (parties < 2) throw ConfigError("split_scalar: need at least 2 parties");
  std::vector<std::uint64_t> out(parties);
  std::uint64_t last = secret;
  for (int p = 0; p + 1 < parties; ++p) {
    StreamId id = stream;
    id.c = static_cast<std::uint32_t>(p);
    out[p] = rng.element(id, index);
    last = field::sub(last, out[p]);
  }
  out[parties - 1] = last;
  return out;
}

std::uint64_t reconstruct_scalar(const std::vector<std::uint64_t>& shares) {
  std::uint64_t s = 0;
  for (auto v : shares) s = field::add(s, v);
  return s;
}

std::vector<std::uint64_t> split_multiplicative(std::uint64_t secret, int parties,
                                                const SeededPrf& rng, StreamId stream,
                                                std::uint64_t index) {
  if (secret == 0) throw ConfigError("split_multiplicative: zero secret");
  std::vector<std::uint64_t> out(parties);
  std::uint64_t prod = 1;
  for (int p = 0; p + 1 < parties; ++p) {
    StreamId id = stream;
    id.c = static_cast<std::uint32_t>(p);
    out[p] = rng.nonzero(id, index);
    prod = field::mul(prod, out[p]);
  }
  out[parties - 1] = field::mul(secret, field::inverse(prod));
  return out;
}

std::uint64_t reconstruct_multiplicative(const std::vector<std::uint64_t>& shares) {
  std::uint64_t s = 1;
  for (auto v : shares) s = field::mul(s, v);
  return s;
}

std::vector<std::uint64_t> split_index(std::uint64_t index, std::uint64_t n, int parties,
                                       const SeededPrf& rng, StreamId stream) {
  if (n == 0 || index >= n) throw ConfigError("split_index: index out of range");
  std::vector<std::uint64_t> out(parties);
  std::uint64_t sum = 0;
  for (int p = 0; p + 1 < parties; ++p) {
    StreamId id = stream;
    id.c = static_cast<std::uint32_t>(p);
    out[p] = rng.below(id, n);
    sum = (sum + out[p]) % n;
  }
  out[parties - 1] = (index + n - sum) % n;
  return out;
}

}  // namespace sgnn
