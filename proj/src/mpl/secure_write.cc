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
#include "sgnn/field/field.h"
#include "sgnn/kernels/modq.h"
#include "sgnn/mpl/crypt_mpl.h"
#include "sgnn/mpl/streams.h"

namespace sgnn {
namespace {

struct WriteState {
  std::uint64_t batches = 0, rows = 0, cols = 0;
  std::vector<std::uint64_t> data;

  std::uint64_t* batch(std::uint64_t r) { return data.data() + r * rows * cols; }
};

Bytes encode(const WriteState& s) {
  ByteWriter w(16 + 8 * s.data.size());
  w.u32(static_cast<std::uint32_t>(s.batches));
  w.u32(static_cast<std::uint32_t>(s.rows));
  w.u32(static_cast<std::uint32_t>(s.cols));
  w.u32(0);
  write_values(w, s.data);
  return w.take();
}

void decode_into(const Bytes& payload, WriteState& s) {
  ByteReader r(payload);
  if (r.u32() != s.batches || r.u32() != s.rows || r.u32() != s.cols || r.u32() != 0) {
    throw FrameError("write pass: payload shape mismatch");
  }
  read_values(r, s.data);
  if (!r.done()) throw FrameError("write pass: trailing bytes");
}

void process(WriteState& s, const PartyEdges& edges, const SeededPrf& prf, int party,
             std::uint32_t pipeline, std::uint32_t invocation, std::vector<std::uint64_t>& tmp) {
  for (std::uint64_t r = 0; r < s.batches; ++r) {
    const MplStreamKey key{party, pipeline, static_cast<std::uint32_t>(r), invocation};
    std::uint64_t* m = s.batch(r);
    add_write_noise(prf, key, m, s.rows, s.cols);
    const std::uint64_t shift = edges.d_first[r] % s.rows;
    if (shift != 0) {
      rotate_rows_into(m, tmp.data(), s.rows, s.cols, shift);
      std::memcpy(m, tmp.data(), tmp.size() * 8);
    }
  }
}

}  // namespace

void secure_aggregate(Matrix& acc, const std::uint64_t* g) {
  kernels::add(acc.data(), acc.data(), g, acc.size());
}

void secure_aggregate(Matrix& acc, const Matrix& g) {
  require_same_shape(acc, g, "secure_aggregate");
  secure_aggregate(acc, g.data());
}

Matrix secure_write(Session& session, const Matrix& values, const PartyEdges& edges,
                    const SeededPrf& prf, std::uint32_t invocation) {
  const BatchLayout& layout = edges.layout;
  if (values.rows() != layout.edges) throw ShapeError("secure_write: one row per edge required");
  const int P = session.parties();
  const int me = session.party();
  const std::uint64_t n = layout.nodes, k = values.cols();

  WriteState s;
  s.batches = layout.batches;
  s.rows = n;
  s.cols = k;
  s.data.assign(s.batches * n * k, 0);
  for (std::uint64_t r = 0; r < s.batches; ++r) {
    std::uint64_t* m = s.batch(r);
    for (std::uint64_t e = layout.begin(r); e < layout.end(r); ++e) {
      std::uint64_t* dst = m + static_cast<std::uint64_t>(edges.d_rel[e]) * k;
      kernels::add(dst, dst, values.row(e), k);
    }
  }
  std::vector<std::uint64_t> tmp(n * k);

  process(s, edges, prf, me, static_cast<std::uint32_t>(me), invocation, tmp);
  for (int hop = 1; hop < P; ++hop) {
    Bytes got = session.ring_exchange(Tag::kWritePass, encode(s));
    decode_into(got, s);
    const auto pipeline = static_cast<std::uint32_t>((me - hop + P) % P);
    process(s, edges, prf, me, pipeline, invocation, tmp);
  }

  Matrix g(n, k);
  for (std::uint64_t r = 0; r < s.batches; ++r) secure_aggregate(g, s.batch(r));
  return g;
}

}  // namespace sgnn
