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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sgnn/field/field.h"
#include "sgnn/provider/correlated.h"
#include "sgnn/transport/session.h"

namespace sgnn {

// Local halves of the multiplicative-to-additive conversion, generic over the
// field policy so the small-field example can be checked by hand.

// <alpha>_p = <W>_p * <R>_p^-1
template <typename F>
std::uint64_t mtoa_alpha_share(std::uint64_t w_mul_share, std::uint64_t r_mul_share) {
  return F::mul(w_mul_share, F::inv(r_mul_share));
}

// [W]_p = alpha * [R]_p once alpha = W / R is public.
template <typename F>
std::uint64_t mtoa_finish(std::uint64_t alpha, std::uint64_t r_add_share) {
  return F::mul(alpha, r_add_share);
}

// Converts multiplicative shares to additive shares, consuming one AM pair
// per value and one opening round for the whole batch.
std::vector<std::uint64_t> m_to_a(Session& session, std::span<const std::uint64_t> w_mul,
                                  AMPool& pool, const std::string& consumer);

}  // namespace sgnn
