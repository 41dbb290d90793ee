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

#include "sgnn/common/bytes.h"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

#include "sgnn/common/errors.h"

namespace sgnn {

static_assert(std::endian::native == std::endian::little,
              "wire formats assume a little-endian host");

namespace {

template <typename T>
void put(Bytes& buf, T v) {
  const auto* p = reinterpret_cast<const std::uint8_t*>(&v);
  buf.insert(buf.end(), p, p + sizeof(T));
}

}  // namespace

void ByteWriter::u16(std::uint16_t v) { put(buf_, v); }
void ByteWriter::u32(std::uint32_t v) { put(buf_, v); }
void ByteWriter::u64(std::uint64_t v) { put(buf_, v); }
void ByteWriter::f64(double v) { put(buf_, v); }

void ByteWriter::raw(std::span<const std::uint8_t> data) {
  buf_.insert(buf_.end(), data.begin(), data.end());
}

void ByteWriter::str(std::string_view s) {
  u32(static_cast<std::uint32_t>(s.size()));
  buf_.insert(buf_.end(), s.begin(), s.end());
}

void ByteReader::need(std::size_t n) const {
  if (data_.size() - pos_ < n) {
    throw FrameError("truncated buffer: need " + std::to_string(n) +
                     " bytes, have " + std::to_string(data_.size() - pos_));
  }
}

namespace {

template <typename T>
T get(std::span<const std::uint8_t> data, std::size_t& pos) {
  T v;
  std::memcpy(&v, data.data() + pos, sizeof(T));
  pos += sizeof(T);
  return v;
}

}  // namespace

std::uint8_t ByteReader::u8() { need(1); return data_[pos_++]; }
std::uint16_t ByteReader::u16() { need(2); return get<std::uint16_t>(data_, pos_); }
std::uint32_t ByteReader::u32() { need(4); return get<std::uint32_t>(data_, pos_); }
std::uint64_t ByteReader::u64() { need(8); return get<std::uint64_t>(data_, pos_); }
double ByteReader::f64() { need(8); return get<double>(data_, pos_); }

std::span<const std::uint8_t> ByteReader::raw(std::size_t n) {
  need(n);
  auto out = data_.subspan(pos_, n);
  pos_ += n;
  return out;
}

std::string ByteReader::str() {
  const auto n = u32();
  auto bytes = raw(n);
  return std::string(bytes.begin(), bytes.end());
}

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  return Bytes(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string& path, std::span<const std::uint8_t> data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + path);
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw ConfigError("short write to " + path);
}

}  // namespace sgnn
