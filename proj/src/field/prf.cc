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

#include "sgnn/field/prf.h"

#include <sodium.h>

#include <cstring>
#include <vector>

#include "sgnn/common/errors.h"
#include "sgnn/field/field.h"

namespace sgnn {
namespace {

constexpr std::size_t kWordsPerBlock = 8;  // 64-byte ChaCha block
constexpr std::size_t kChunkBlocks = 1024;

using Nonce = std::array<std::uint8_t, crypto_stream_xchacha20_NONCEBYTES>;

Nonce make_nonce(const StreamId& id) {
  static_assert(crypto_stream_xchacha20_NONCEBYTES == 24);
  Nonce n{};
  std::memcpy(n.data() + 0, &id.kind, 4);
  std::memcpy(n.data() + 4, &id.a, 4);
  std::memcpy(n.data() + 8, &id.b, 4);
  std::memcpy(n.data() + 12, &id.c, 4);
  std::memcpy(n.data() + 16, &id.round, 8);
  return n;
}

const std::uint8_t* zero_block() {
  static const std::vector<std::uint8_t> zeros(kChunkBlocks * 64, 0);
  return zeros.data();
}

// Words [start, start+count) of the keystream selected by (seed, id).
void keystream_words(const Seed& seed, const StreamId& id, std::uint64_t start,
                     std::uint64_t* out, std::size_t count) {
  if (count == 0) return;
  const Nonce nonce = make_nonce(id);
  std::uint64_t block = start / kWordsPerBlock;
  std::size_t skip = static_cast<std::size_t>(start % kWordsPerBlock);
  std::uint64_t tmp[kWordsPerBlock];
  // Unaligned head.
  if (skip != 0) {
    crypto_stream_xchacha20_xor_ic(reinterpret_cast<std::uint8_t*>(tmp), zero_block(), 64,
                                   nonce.data(), block, seed.data());
    const std::size_t take = std::min(count, kWordsPerBlock - skip);
    std::memcpy(out, tmp + skip, take * 8);
    out += take;
    count -= take;
    ++block;
  }
  // Whole blocks straight into the output.
  while (count >= kWordsPerBlock) {
    const std::size_t blocks = std::min(count / kWordsPerBlock, kChunkBlocks);
    crypto_stream_xchacha20_xor_ic(reinterpret_cast<std::uint8_t*>(out), zero_block(),
                                   blocks * 64, nonce.data(), block, seed.data());
    out += blocks * kWordsPerBlock;
    count -= blocks * kWordsPerBlock;
    block += blocks;
  }
  if (count != 0) {
    crypto_stream_xchacha20_xor_ic(reinterpret_cast<std::uint8_t*>(tmp), zero_block(), 64,
                                   nonce.data(), block, seed.data());
    std::memcpy(out, tmp, count * 8);
  }
}

// The masked word hit q itself (probability 2^-61); redraw from a hash.
std::uint64_t fallback_element(const Seed& seed, const StreamId& id, std::uint64_t index) {
  const Nonce nonce = make_nonce(id);
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::uint8_t msg[24 + 16];
    std::memcpy(msg, nonce.data(), 24);
    std::memcpy(msg + 24, &index, 8);
    std::memcpy(msg + 32, &attempt, 8);
    std::uint64_t v = 0;
    crypto_generichash(reinterpret_cast<std::uint8_t*>(&v), sizeof v, msg, sizeof msg,
                       seed.data(), seed.size());
    v &= kModulus;
    if (v != kModulus) return v;
  }
}

}  // namespace

void ensure_crypto() {
  static const int rc = sodium_init();
  if (rc < 0) throw Error("libsodium initialisation failed");
}

SeededPrf SeededPrf::from_u64(std::uint64_t value) {
  ensure_crypto();
  Seed s{};
  crypto_generichash(s.data(), s.size(), reinterpret_cast<const std::uint8_t*>(&value),
                     sizeof value, nullptr, 0);
  return SeededPrf(s);
}

void SeededPrf::words(const StreamId& id, std::uint64_t start, std::uint64_t* out,
                      std::size_t count) const {
  ensure_crypto();
  keystream_words(seed_, id, start, out, count);
}

void SeededPrf::fill(const StreamId& id, std::uint64_t start, std::uint64_t* out,
                     std::size_t count) const {
  words(id, start, out, count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] &= kModulus;
    if (out[i] == kModulus) out[i] = fallback_element(seed_, id, start + i);
  }
}

std::uint64_t SeededPrf::element(const StreamId& id, std::uint64_t index) const {
  std::uint64_t v;
  fill(id, index, &v, 1);
  return v;
}

Matrix SeededPrf::matrix(const StreamId& id, std::size_t rows, std::size_t cols) const {
  Matrix m(rows, cols);
  fill(id, 0, m.data(), m.size());
  return m;
}

std::uint64_t SeededPrf::nonzero(const StreamId& id, std::uint64_t index) const {
  // Sub-stream: flip the top bit of c so it never collides with fill().
  StreamId sub = id;
  sub.c ^= 0x80000000u;
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t v = element(sub, index * 4 + attempt);
    if (v != 0) return v;
    if (attempt == 3) {
      ++sub.round;
      attempt = 0;
    }
  }
}

std::uint64_t SeededPrf::below(const StreamId& id, std::uint64_t bound) const {
  if (bound == 0) throw ConfigError("SeededPrf::below: zero bound");
  // Reject the low 2^64 mod bound words so the rest split evenly.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (std::uint64_t i = 0;; ++i) {
    std::uint64_t w;
    words(id, i, &w, 1);
    if (w >= threshold) return w % bound;
  }
}

Seed derive_seed(const Seed& master, std::string_view label, std::uint64_t index) {
  ensure_crypto();
  std::vector<std::uint8_t> msg(label.begin(), label.end());
  msg.push_back(0);
  const auto* ip = reinterpret_cast<const std::uint8_t*>(&index);
  msg.insert(msg.end(), ip, ip + 8);
  Seed out{};
  crypto_generichash(out.data(), out.size(), msg.data(), msg.size(), master.data(),
                     master.size());
  return out;
}

std::string seed_hex(const Seed& s) {
  std::string out(s.size() * 2 + 1, '\0');
  sodium_bin2hex(out.data(), out.size(), s.data(), s.size());
  out.pop_back();
  return out;
}

Matrix prf_matrix(const SeededPrf& prf, std::uint64_t round, std::size_t rows, std::size_t cols) {
  return prf.matrix(StreamId{0, 0, 0, 0, round}, rows, cols);
}

}  // namespace sgnn
