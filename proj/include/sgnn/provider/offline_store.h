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

#include <string>

#include "sgnn/common/bytes.h"
#include "sgnn/provider/correlated.h"

namespace sgnn {

// File layout: magic "SGNNOFF1", u32 client, u32 party, u32 parties,
// u32 fraction bits, u64 N_max, 32-byte local seed, u64 AM cursor,
// u64 truncation cursor, u64 compare cursor, u32 triple count, then per
// triple (u32 layer, u64 id, A, B, C matrices), then AM add/mul, truncation r/r_hi, compare s/st and
// its triple a/b/c as n x 1 matrices. Cursors persist so a reloaded pool
// never hands out a used entry.
Bytes serialize_offline(const PartyOffline& off);
PartyOffline deserialize_offline(const Bytes& data);

void save_offline(const std::string& path, const PartyOffline& off);
PartyOffline load_offline(const std::string& path);

std::string offline_filename(std::uint32_t client_id, int party);

}  // namespace sgnn
