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

#include "sgnn/field/fixed_point.h"

#include <cmath>
#include <string>

#include "sgnn/common/errors.h"
#include "sgnn/field/field.h"

namespace sgnn {

FixedPointCodec::FixedPointCodec(int fraction_bits) : f_(fraction_bits) {
  if (fraction_bits < 0 || fraction_bits > 28) {
    throw ConfigError("fraction bits must be in [0, 28], got " +
                      std::to_string(fraction_bits));
  }
  scale_ = std::ldexp(1.0, fraction_bits);
}

std::uint64_t FixedPointCodec::encode(double x) const {
  if (!std::isfinite(x)) throw ConfigError("encode: non-finite value");
  const double limit = std::ldexp(1.0, 60 - f_);
  if (std::fabs(x) >= limit) {
    throw ConfigError("encode: |" + std::to_string(x) + "| exceeds 2^" +
                      std::to_string(60 - f_));
  }
  return field::from_signed(std::llround(x * scale_));
}

double FixedPointCodec::decode(std::uint64_t v) const {
  return static_cast<double>(field::to_signed(v)) / scale_;
}

double FixedPointCodec::decode_double_scale(std::uint64_t v) const {
  return static_cast<double>(field::to_signed(v)) / (scale_ * scale_);
}

}  // namespace sgnn
