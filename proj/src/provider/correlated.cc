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

#include "sgnn/provider/correlated.h"

#include "sgnn/common/errors.h"

namespace sgnn {

std::uint64_t PoolCursor::take(std::uint64_t count, std::size_t capacity,
                               const std::string& consumer) {
  if (cursor_ + count > capacity) {
    throw PoolExhausted(name_ + " pool exhausted: " + consumer + " needs " +
                        std::to_string(count) + ", " + std::to_string(capacity - cursor_) +
                        " left of " + std::to_string(capacity));
  }
  const std::uint64_t begin = cursor_;
  cursor_ += count;
  audit_.push_back({consumer, begin, count});
  return begin;
}

}  // namespace sgnn
