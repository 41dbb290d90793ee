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

#include <cstring>

#include "sgnn/common/errors.h"
#include "sgnn/mpl/crypt_mpl.h"
#include "sgnn/mpl/streams.h"

namespace sgnn {
namespace {

// R index accumulators followed by R stacked N x K matrices.
struct ReadState {
  std::uint64_t batches = 0, rows = 0, cols = 0;
  std::vector<std::uint64_t> acc;
  std::vector<std::uint64_t> data;

  std::uint64_t* batch(std::uint64_t r) { return data.data() + r * rows * cols; }
};

Bytes encode(const ReadState& s) {
  ByteWriter w(16 + 8 * (s.acc.size() + s.data.size()));
  w.u32(static_cast<std::uint32_t>(s.batches));
  w.u32(static_cast<std::uint32_t>(s.rows));
  w.u32(static_cast<std::uint32_t>(s.cols));
  w.u32(0);
  w.raw({reinterpret_cast<const std::uint8_t*>(s.acc.data()), s.acc.size() * 8});
  write_values(w, s.data);
  return w.take();
}

void decode_into(const Bytes& payload, ReadState& s) {
  ByteReader r(payload);
  if (r.u32() != s.batches || r.u32() != s.rows || r.u32() != s.cols || r.u32() != 0) {
    throw FrameError("read pass: payload shape mismatch");
  }
  auto acc = r.raw(s.acc.size() * 8);
  std::memcpy(s.acc.data(), acc.data(), acc.size());
  read_values(r, s.data);
  if (!r.done()) throw FrameError("read pass: trailing bytes");
}

// One visit: noise, rotation and index update for every batch.
void process(ReadState& s, const PartyEdges& edges, const SeededPrf& prf, int party,
             std::uint32_t pipeline, std::uint32_t invocation, std::vector<std::uint64_t>& tmp) {
  const std::uint64_t n = s.rows;
  for (std::uint64_t r = 0; r < s.batches; ++r) {
    const MplStreamKey key{party, pipeline, static_cast<std::uint32_t>(r), invocation};
    std::uint64_t* m = s.batch(r);
    add_read_noise(prf, key, m, s.rows, s.cols);
    const std::uint64_t rho = read_rotation(prf, key, n);
    if (rho != 0) {
      rotate_rows_into(m, tmp.data(), s.rows, s.cols, rho);
      std::memcpy(m, tmp.data(), tmp.size() * 8);
    }
    s.acc[r] += edges.s_first[r] + rho;
  }
}

}  // namespace

Matrix secure_read(Session& session, const Matrix& features, const PartyEdges& edges,
                   const SeededPrf& prf, std::uint32_t invocation) {
  const BatchLayout& layout = edges.layout;
  if (features.rows() != layout.nodes) throw ShapeError("secure_read: feature rows != N");
  const int P = session.parties();
  const int me = session.party();
  const std::uint64_t n = features.rows(), k = features.cols();

  ReadState s;
  s.batches = layout.batches;
  s.rows = n;
  s.cols = k;
  s.acc.assign(s.batches, 0);
  s.data.resize(s.batches * n * k);
  for (std::uint64_t r = 0; r < s.batches; ++r) {
    std::memcpy(s.batch(r), features.data(), n * k * 8);
  }
  std::vector<std::uint64_t> tmp(n * k);

  process(s, edges, prf, me, static_cast<std::uint32_t>(me), invocation, tmp);
  for (int hop = 1; hop < P; ++hop) {
    Bytes got = session.ring_exchange(Tag::kReadPass, encode(s));
    decode_into(got, s);
    const auto pipeline = static_cast<std::uint32_t>((me - hop + P) % P);
    process(s, edges, prf, me, pipeline, invocation, tmp);
  }

  Matrix out(layout.edges, k);
  for (std::uint64_t r = 0; r < s.batches; ++r) {
    const std::uint64_t* m = s.batch(r);
    for (std::uint64_t e = layout.begin(r); e < layout.end(r); ++e) {
      const std::uint64_t row = (s.acc[r] + edges.s_rel[e]) % n;
      std::memcpy(out.row(e), m + row * k, k * 8);
    }
  }
  return out;
}

}  // namespace sgnn
