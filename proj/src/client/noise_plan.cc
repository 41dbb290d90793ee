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

#include "sgnn/client/noise_plan.h"

#include <cstring>

#include "sgnn/common/errors.h"
#include "sgnn/field/field.h"
#include "sgnn/field/sharing.h"
#include "sgnn/kernels/modq.h"
#include "sgnn/mpl/streams.h"

namespace sgnn {
namespace {
constexpr std::uint32_t kIndexShareStream = 0x700;
}  // namespace

NoisePlan make_noise_plan(const EdgeBatches& batches, int parties, const Seed& master) {
  if (parties < 2) throw ConfigError("noise plan: need at least 2 parties");
  NoisePlan plan;
  plan.parties = parties;
  for (int p = 0; p < parties; ++p) plan.seeds.push_back(derive_seed(master, "party-seed", p));
  const SeededPrf rng(derive_seed(master, "index-shares", 0));
  const std::uint64_t n = batches.layout.nodes;
  plan.s_first_shares.assign(parties, std::vector<std::uint64_t>(batches.layout.batches));
  plan.d_first_shares.assign(parties, std::vector<std::uint64_t>(batches.layout.batches));
  for (std::uint64_t r = 0; r < batches.layout.batches; ++r) {
    const auto rr = static_cast<std::uint32_t>(r);
    auto s = split_index(batches.s_first[r], n, parties, rng, {kIndexShareStream, 0, rr, 0, r >> 32});
    auto d = split_index(batches.d_first[r], n, parties, rng, {kIndexShareStream, 1, rr, 0, r >> 32});
    for (int p = 0; p < parties; ++p) {
      plan.s_first_shares[p][r] = s[p];
      plan.d_first_shares[p][r] = d[p];
    }
  }
  return plan;
}

std::uint64_t simulated_read_index(const EdgeBatches& batches, const NoisePlan& plan,
                                   std::uint64_t edge, int pipeline, std::uint32_t invocation) {
  const std::uint64_t r = batches.batch_of(edge);
  const std::uint64_t n = batches.layout.nodes;
  std::uint64_t acc = 0;
  for (int t = 0; t < plan.parties; ++t) {
    const int p = (pipeline + t) % plan.parties;
    const SeededPrf prf(plan.seeds[p]);
    const MplStreamKey key{p, static_cast<std::uint32_t>(pipeline), static_cast<std::uint32_t>(r),
                           invocation};
    acc += plan.s_first_shares[p][r] + read_rotation(prf, key, n);
  }
  return acc + batches.s_rel[edge];
}

Matrix precompute_noise(const EdgeBatches& batches, const NoisePlan& plan, std::size_t cols,
                        std::uint32_t invocation,
                        const std::vector<std::uint64_t>* encoded_weights) {
  const BatchLayout& layout = batches.layout;
  const std::uint64_t n = layout.nodes;
  const int P = plan.parties;
  if (encoded_weights != nullptr && encoded_weights->size() != layout.edges) {
    throw ShapeError("precompute_noise: one weight per edge required");
  }
  std::vector<SeededPrf> prfs;
  for (const auto& s : plan.seeds) prfs.emplace_back(s);

  Matrix xi(n, cols);
  std::vector<std::uint64_t> row(cols), acc(cols);
  std::vector<std::uint64_t> noise(n * cols), rotated(n * cols);
  std::vector<std::uint64_t> prefix(P);

  for (std::uint64_t r = 0; r < layout.batches; ++r) {
    const auto rr = static_cast<std::uint32_t>(r);
    for (int i = 0; i < P; ++i) {
      const auto pipeline = static_cast<std::uint32_t>(i);
      // Read pass: noise added at visit t has since been rotated by every
      // later rotation, so it sits at row s_e + (rotations before t).
      std::uint64_t run = 0;
      for (int t = 0; t < P; ++t) {
        const int p = (i + t) % P;
        prefix[t] = run;
        run = (run + read_rotation(prfs[p], {p, pipeline, rr, invocation}, n)) % n;
      }
      for (std::uint64_t e = layout.begin(r); e < layout.end(r); ++e) {
        const std::uint64_t s_e = batches.source(e);
        std::fill(acc.begin(), acc.end(), 0);
        for (int t = 0; t < P; ++t) {
          const int p = (i + t) % P;
          read_noise_row(prfs[p], {p, pipeline, rr, invocation}, cols, (s_e + prefix[t]) % n,
                         row.data());
          kernels::add(acc.data(), acc.data(), row.data(), cols);
        }
        if (encoded_weights != nullptr) {
          kernels::scale(acc.data(), (*encoded_weights)[e], acc.data(), cols);
        }
        std::uint64_t* dst = xi.row(batches.destination(e));
        kernels::add(dst, dst, acc.data(), cols);
      }
      // Write pass: noise added at visit t is rotated by the D_f shares of
      // that visit and every later one.
      std::uint64_t suffix = 0;
      for (int t = P - 1; t >= 0; --t) {
        const int p = (i + t) % P;
        suffix = (suffix + plan.d_first_shares[p][r]) % n;
        std::fill(noise.begin(), noise.end(), 0);
        add_write_noise(prfs[p], {p, pipeline, rr, invocation}, noise.data(), n, cols);
        rotate_rows_into(noise.data(), rotated.data(), n, cols, suffix);
        kernels::add(xi.data(), xi.data(), rotated.data(), xi.size());
      }
    }
  }
  return xi;
}

}  // namespace sgnn
