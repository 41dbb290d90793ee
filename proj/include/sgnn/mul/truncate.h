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

#include "sgnn/field/matrix.h"
#include "sgnn/provider/correlated.h"
#include "sgnn/transport/session.h"

namespace sgnn {

// Headroom exponent: inputs must satisfy |x| < 2^b with b = 2f + 14, i.e. a
// product whose real value is below 2^14 in magnitude.
int truncation_headroom_bits(int fraction_bits);

// Divides shared values by 2^f. Opens c = x + 2^b + r once for the whole
// batch; the result is floor(x / 2^f) or that plus one (error < 1 ULP).
std::vector<std::uint64_t> truncate(Session& session, std::span<const std::uint64_t> x,
                                    TruncationPool& pool, const std::string& consumer);
Matrix truncate(Session& session, const Matrix& x, TruncationPool& pool,
                const std::string& consumer);

// Local step after opening, exposed for tests.
std::uint64_t truncate_finish(std::uint64_t opened, std::uint64_t r_hi_share, int fraction_bits,
                              bool leader);

}  // namespace sgnn
