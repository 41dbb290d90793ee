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

namespace sgnn {

class FixedPointCodec {
 public:
  static constexpr int kDefaultFractionBits = 16;

  explicit FixedPointCodec(int fraction_bits = kDefaultFractionBits);

  int fraction_bits() const { return f_; }
  double scale() const { return scale_; }

  // round(2^f * x) mod q. Throws ConfigError if |x| >= 2^(60-f) or x is not
  // finite.
  std::uint64_t encode(double x) const;
  double decode(std::uint64_t v) const;

  // Decodes a value carrying 2f fraction bits (an untruncated product).
  double decode_double_scale(std::uint64_t v) const;

  // One unit in the last place, 2^-f.
  double ulp() const { return 1.0 / scale_; }

 private:
  int f_;
  double scale_;
};

}  // namespace sgnn
