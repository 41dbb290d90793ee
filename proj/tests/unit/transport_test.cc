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

#include <atomic>
#include <cstdlib>

#include "sgnn/common/errors.h"
#include "sgnn/field/field.h"
#include "sgnn/transport/channel.h"
#include "sgnn/transport/wire.h"
#include "test_util.h"

namespace sgnn {
namespace {

using testing::run_loopback;

std::span<const std::uint8_t> as_bytes(const Bytes& b) { return {b.data(), b.size()}; }

TEST(Wire, FrameRoundTrip) {
  WireHeader h;
  h.session.fill(3);
  h.round = 77;
  h.sender = 2;
  h.tag = Tag::kBeaverOpen;
  const Bytes payload = {1, 2, 3, 4, 5};
  const Bytes f = encode_frame(h, payload);
  EXPECT_EQ(f.size(), kFrameOverhead + payload.size());
  const Frame d = decode_frame(f);
  EXPECT_EQ(d.header.session, h.session);
  EXPECT_EQ(d.header.round, 77u);
  EXPECT_EQ(d.header.sender, 2);
  EXPECT_EQ(d.header.tag, Tag::kBeaverOpen);
  EXPECT_EQ(d.payload, payload);

  Bytes bad = f;
  bad[0] ^= 1;
  EXPECT_THROW(decode_frame(bad), FrameError);
  EXPECT_THROW(decode_frame(Bytes(f.begin(), f.begin() + 10)), FrameError);
}

TEST(Session, RingExchangeAndOpen) {
  for (int parties : {2, 3, 5}) {
    std::vector<std::uint64_t> opened(parties), product(parties);
    std::vector<int> got_from(parties);
    const auto ts = run_loopback(parties, [&](Session& s) {
      ByteWriter w;
      w.u32(static_cast<std::uint32_t>(s.party()));
      const Bytes in = s.ring_exchange(Tag::kReadPass, as_bytes(w.buffer()));
      ByteReader r(in);
      got_from[s.party()] = static_cast<int>(r.u32());
      const std::uint64_t mine = static_cast<std::uint64_t>(s.party() + 1);
      opened[s.party()] = s.open_sum(Tag::kBeaverOpen, std::span(&mine, 1))[0];
      product[s.party()] = s.open_product(Tag::kAlphaOpen, std::span(&mine, 1))[0];
    });
    std::uint64_t want_sum = 0, want_prod = 1;
    for (int p = 0; p < parties; ++p) {
      want_sum += p + 1;
      want_prod *= p + 1;
    }
    for (int p = 0; p < parties; ++p) {
      EXPECT_EQ(got_from[p], (p - 1 + parties) % parties);
      EXPECT_EQ(opened[p], want_sum);
      EXPECT_EQ(product[p], want_prod);
      EXPECT_EQ(ts[p].rounds(), 3u);
      EXPECT_EQ(ts[p].total_sent(), ts[p].total_received());
    }
    // Identical message sizes everywhere, so every party sends the same bytes.
    EXPECT_EQ(ts[0].total_sent(), ts[parties - 1].total_sent());
  }
}

TEST(Session, PhaseStatsAddUp) {
  const auto ts = run_loopback(3, [&](Session& s) {
    const std::uint64_t v[4] = {1, 2, 3, 4};
    {
      PhaseScope a(s, "alpha");
      s.open_sum(Tag::kBeaverOpen, v);
    }
    {
      PhaseScope b(s, "beta");
      s.open_sum(Tag::kBeaverOpen, v);
      s.open_sum(Tag::kBeaverOpen, std::span(v, 2));
    }
  });
  const Transcript& t = ts[0];
  std::uint64_t sent = 0, rounds = 0;
  for (const auto& [name, st] : t.phases()) {
    sent += st.bytes_sent;
    rounds += st.rounds;
  }
  EXPECT_EQ(sent, t.total_sent());
  EXPECT_EQ(rounds, t.rounds());
  EXPECT_EQ(t.phases().at("alpha").rounds, 1u);
  EXPECT_EQ(t.phases().at("beta").rounds, 2u);
}

TEST(Session, WrongTagIsRejected) {
  EXPECT_THROW(run_loopback(2,
                            [&](Session& s) {
                              s.begin_step();
                              const Bytes p = {1};
                              if (s.party() == 0) {
                                s.send(1, Tag::kControl, p);
                              } else {
                                s.recv(0, Tag::kReadPass);
                              }
                            }),
               ProtocolError);
}

TEST(Session, FailureAbortsPeersWithPhase) {
  try {
    run_loopback(3, [&](Session& s) {
      PhaseScope ph(s, "doomed");
      if (s.party() == 1) throw ConfigError("bad input on purpose");
      const std::uint64_t v = 1;
      s.open_sum(Tag::kBeaverOpen, std::span(&v, 1));
    });
    FAIL() << "expected an error";
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("party 1"), std::string::npos);
    EXPECT_NE(msg.find("doomed"), std::string::npos) << msg;
  }
}

TEST(Transport, LoopbackTimeout) {
  LoopbackNetwork net(2, std::chrono::milliseconds(50));
  auto a = net.endpoint(0);
  EXPECT_THROW(a->recv(1), TimeoutError);
}

TEST(Transport, SocketMatchesLoopbackDigest) {
  SessionId id{};
  id.fill(9);
  auto body = [](Session& s) {
    std::vector<std::uint64_t> v(100);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field::reduce(i * 7919 + s.party());
    ByteWriter w;
    write_values(w, v);
    s.ring_exchange(Tag::kReadPass, as_bytes(w.buffer()));
    s.open_sum(Tag::kBeaverOpen, v);
  };
  const auto lo = run_parties(Backend::kLoopback, 3, id, body);
  const auto so = run_parties(Backend::kSocket, 3, id, body);
  for (int p = 0; p < 3; ++p) {
    EXPECT_EQ(lo[p].digest_hex(), so[p].digest_hex());
    EXPECT_EQ(lo[p].rounds(), so[p].rounds());
  }
}

TEST(Transport, BackendNames) {
  EXPECT_EQ(parse_backend("loopback"), Backend::kLoopback);
  EXPECT_EQ(parse_backend("socket"), Backend::kSocket);
  EXPECT_THROW(parse_backend("carrier-pigeon"), ConfigError);
}

}  // namespace
}  // namespace sgnn
