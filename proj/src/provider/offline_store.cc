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

#include "sgnn/provider/offline_store.h"

#include <cstring>

#include "sgnn/common/errors.h"

namespace sgnn {
namespace {

constexpr char kMagic[8] = {'S', 'G', 'N', 'N', 'O', 'F', 'F', '1'};

void put_vec(ByteWriter& w, const std::vector<std::uint64_t>& v) {
  write_matrix(w, Matrix(v.size(), 1, v));
}

std::vector<std::uint64_t> get_vec(ByteReader& r) { return read_matrix(r).values(); }

// Replays a cursor position as one audit entry.
void restore_cursor(PoolCursor& c, std::uint64_t pos, std::size_t capacity) {
  if (pos > capacity) throw ConfigError("offline file: cursor beyond pool size");
  if (pos > 0) c.take(pos, capacity, "previous sessions");
}

}  // namespace

Bytes serialize_offline(const PartyOffline& off) {
  ByteWriter w;
  w.raw({reinterpret_cast<const std::uint8_t*>(kMagic), 8});
  w.u32(off.client_id);
  w.u32(static_cast<std::uint32_t>(off.party));
  w.u32(static_cast<std::uint32_t>(off.parties));
  w.u32(static_cast<std::uint32_t>(off.fraction_bits));
  w.u64(off.n_max);
  w.raw(off.local_seed);
  w.u64(off.am.cursor.position());
  w.u64(off.truncation.cursor.position());
  w.u64(off.compare.cursor.position());
  w.u32(static_cast<std::uint32_t>(off.matrix_triples.size()));
  for (const auto& [layer, t] : off.matrix_triples) {
    w.u32(layer);
    w.u64(t.id);
    write_matrix(w, t.a);
    write_matrix(w, t.b);
    write_matrix(w, t.c);
  }
  put_vec(w, off.am.add);
  put_vec(w, off.am.mul);
  put_vec(w, off.truncation.r);
  put_vec(w, off.truncation.r_hi);
  put_vec(w, off.compare.s);
  put_vec(w, off.compare.st);
  put_vec(w, off.compare.triples.a);
  put_vec(w, off.compare.triples.b);
  put_vec(w, off.compare.triples.c);
  return w.take();
}

PartyOffline deserialize_offline(const Bytes& data) {
  ByteReader r(data);
  auto magic = r.raw(8);
  if (std::memcmp(magic.data(), kMagic, 8) != 0) throw ConfigError("not an offline material file");
  PartyOffline off;
  off.client_id = r.u32();
  off.party = static_cast<int>(r.u32());
  off.parties = static_cast<int>(r.u32());
  off.fraction_bits = static_cast<int>(r.u32());
  off.n_max = r.u64();
  auto seed = r.raw(32);
  std::memcpy(off.local_seed.data(), seed.data(), 32);
  const std::uint64_t am_pos = r.u64();
  const std::uint64_t tr_pos = r.u64();
  const std::uint64_t cmp_pos = r.u64();
  const std::uint32_t triples = r.u32();
  for (std::uint32_t i = 0; i < triples; ++i) {
    const std::uint32_t layer = r.u32();
    MatrixBeaverTriple t;
    t.id = r.u64();
    t.a = read_matrix(r);
    t.b = read_matrix(r);
    t.c = read_matrix(r);
    off.matrix_triples.emplace(layer, std::move(t));
  }
  off.am.add = get_vec(r);
  off.am.mul = get_vec(r);
  off.truncation.fraction_bits = off.fraction_bits;
  off.truncation.r = get_vec(r);
  off.truncation.r_hi = get_vec(r);
  off.compare.s = get_vec(r);
  off.compare.st = get_vec(r);
  off.compare.triples.a = get_vec(r);
  off.compare.triples.b = get_vec(r);
  off.compare.triples.c = get_vec(r);
  if (!r.done()) throw ConfigError("offline file: trailing bytes");
  if (off.am.add.size() != off.am.mul.size() || off.truncation.r.size() != off.truncation.r_hi.size() ||
      off.compare.s.size() != off.compare.st.size() ||
      off.compare.triples.size() != off.compare.s.size()) {
    throw ConfigError("offline file: inconsistent pool sizes");
  }
  restore_cursor(off.am.cursor, am_pos, off.am.size());
  restore_cursor(off.truncation.cursor, tr_pos, off.truncation.size());
  restore_cursor(off.compare.cursor, cmp_pos, off.compare.size());
  return off;
}

void save_offline(const std::string& path, const PartyOffline& off) {
  write_file(path, serialize_offline(off));
}

PartyOffline load_offline(const std::string& path) { return deserialize_offline(read_file(path)); }

std::string offline_filename(std::uint32_t client_id, int party) {
  return "offline_c" + std::to_string(client_id) + "_p" + std::to_string(party) + ".bin";
}

}  // namespace sgnn
