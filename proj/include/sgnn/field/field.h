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

// Every share, mask and fixed-point value lives in GF(q), q = 2^61 - 1.
inline constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;

namespace field {

inline constexpr std::uint64_t reduce(std::uint64_t x) {
  x = (x & kModulus) + (x >> 61);
  return x >= kModulus ? x - kModulus : x;
}

inline constexpr std::uint64_t reduce128(unsigned __int128 x) {
  const std::uint64_t lo = static_cast<std::uint64_t>(x) & kModulus;
  const std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
  return reduce(lo + reduce(hi));
}

inline constexpr std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s >= kModulus ? s - kModulus : s;
}

inline constexpr std::uint64_t sub(std::uint64_t a, std::uint64_t b) {
  return a >= b ? a - b : a + kModulus - b;
}

inline constexpr std::uint64_t neg(std::uint64_t a) {
  return a == 0 ? 0 : kModulus - a;
}

inline constexpr std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  return reduce128(static_cast<unsigned __int128>(a) * b);
}

// Maps a signed integer into the field.
inline constexpr std::uint64_t from_signed(std::int64_t v) {
  if (v >= 0) return reduce(static_cast<std::uint64_t>(v));
  return neg(reduce(static_cast<std::uint64_t>(-(v + 1)) + 1));
}

// Values above (q-1)/2 decode as negatives.
inline constexpr std::int64_t to_signed(std::uint64_t v) {
  return v > (kModulus - 1) / 2 ? -static_cast<std::int64_t>(kModulus - v)
                                : static_cast<std::int64_t>(v);
}

std::uint64_t pow(std::uint64_t base, std::uint64_t exp);

// Inverse via the extended Euclidean algorithm. Throws on zero.
std::uint64_t inverse(std::uint64_t x);

// Montgomery batch inversion; every input must be nonzero.
void batch_inverse(std::uint64_t* values, std::size_t n);

}  // namespace field

// Generic extended Euclid for any modulus m < 2^63; returns y with x*y = 1.
// Throws ConfigError when gcd(x, m) != 1.
std::uint64_t inverse_mod(std::uint64_t x, std::uint64_t m);

// Arithmetic policy for the production field. Protocol steps that have a
// small-field hand example are templated on a policy with this shape.
struct PrimeField {
  static constexpr std::uint64_t modulus = kModulus;
  static std::uint64_t add(std::uint64_t a, std::uint64_t b) { return field::add(a, b); }
  static std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return field::sub(a, b); }
  static std::uint64_t mul(std::uint64_t a, std::uint64_t b) { return field::mul(a, b); }
  static std::uint64_t inv(std::uint64_t a) { return field::inverse(a); }
};

// Toy prime field for hand-checkable tests.
template <std::uint64_t Q>
struct SmallField {
  static_assert(Q < (std::uint64_t{1} << 32));
  static constexpr std::uint64_t modulus = Q;
  static std::uint64_t add(std::uint64_t a, std::uint64_t b) { return (a + b) % Q; }
  static std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return (a + Q - b) % Q; }
  static std::uint64_t mul(std::uint64_t a, std::uint64_t b) { return (a * b) % Q; }
  static std::uint64_t inv(std::uint64_t a) { return inverse_mod(a, Q); }
};

}  // namespace sgnn
