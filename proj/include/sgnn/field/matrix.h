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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sgnn/common/bytes.h"

namespace sgnn {

// Dense row-major matrix of field elements. One party's share of a secret
// matrix is just a Matrix; which party owns it is tracked by the caller.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<std::uint64_t> data);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  std::uint64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint64_t* row(std::size_t r) { return data_.data() + r * cols_; }
  const std::uint64_t* row(std::size_t r) const { return data_.data() + r * cols_; }
  std::uint64_t* data() { return data_.data(); }
  const std::uint64_t* data() const { return data_.data(); }
  std::vector<std::uint64_t>& values() { return data_; }
  const std::vector<std::uint64_t>& values() const { return data_; }

  bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  bool operator==(const Matrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> data_;
};

using ShareMatrix = Matrix;

// Field matrix product.
Matrix matmul(const Matrix& a, const Matrix& b);
// Entrywise product.
Matrix hadamard(const Matrix& a, const Matrix& b);
Matrix scaled(const Matrix& a, std::uint64_t s);

// out[x] = in[(x - k) mod rows]: the content of row x moves to row x + k.
Matrix rotate_rows(const Matrix& m, std::size_t k);
void rotate_rows_into(const std::uint64_t* in, std::uint64_t* out, std::size_t rows,
                      std::size_t cols, std::size_t k);

// Horizontal concatenation (same row count).
Matrix hconcat(const std::vector<const Matrix*>& parts);

// Throws ShapeError with the given context when shapes differ.
void require_same_shape(const Matrix& a, const Matrix& b, const char* what);

// Wire/file form: u32 rows, u32 cols, then row-major u64 little-endian.
void write_matrix(ByteWriter& w, const Matrix& m);
Matrix read_matrix(ByteReader& r);
// Raw values without a header, for payloads whose shape is implied.
void write_values(ByteWriter& w, std::span<const std::uint64_t> v);
void read_values(ByteReader& r, std::span<std::uint64_t> out);

}  // namespace sgnn
