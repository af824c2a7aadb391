// Copyright 2026 The hyparr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyparr/rational.hpp"

namespace hyparr {

// Dense row-major rational matrix.
class QMat {
 public:
  QMat() = default;
  QMat(std::size_t rows, std::size_t cols);
  static QMat from_rows(const std::vector<QVec>& rows, std::size_t cols);
  static QMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<Rat> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rat> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  void append_row(std::span<const Rat> values);
  void swap_rows(std::size_t a, std::size_t b);
  // Keeps the first `count` rows.
  void truncate_rows(std::size_t count);

  QVec multiply(std::span<const Rat> x) const;
  QMat multiply(const QMat& other) const;

  bool operator==(const QMat& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

// Reduced row echelon form in place, pivoting only among the first
// `pivot_cols` columns (all columns when pivot_cols exceeds cols()). Zero rows
// are moved to the bottom. Returns the pivot column of each nonzero row.
std::vector<std::size_t> rref_in_place(QMat& m, std::size_t pivot_cols);

std::size_t rank(QMat m);

}  // namespace hyparr
