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

#include "sgnn/provider/correlated.h"
#include "sgnn/transport/session.h"

namespace sgnn {

// Shares of [x > 0] as the integers 0/1 (not fixed-point). Two open rounds:
// the masked product y = s*t*x is formed with a scalar triple and opened;
// sign(y) * s then gives the sign of x. Exact for |x| < 2^39.
std::vector<std::uint64_t> compare_gtz(Session& session, std::span<const std::uint64_t> x,
                                       ComparePool& pool, const std::string& consumer);

// Local step after y is public, for tests.
std::uint64_t compare_finish(std::uint64_t y, std::uint64_t s_share, bool leader);

}  // namespace sgnn
