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

#include "hyparr/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyparr {

QMat::QMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

QMat QMat::from_rows(const std::vector<QVec>& rows, std::size_t cols) {
  QMat m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void QMat::append_row(std::span<const Rat> values) {
  if (values.size() != cols_) {
    throw std::invalid_argument("QMat::append_row: row length mismatch");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void QMat::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
  }
}

void QMat::truncate_rows(std::size_t count) {
  if (count >= rows_) return;
  rows_ = count;
  data_.resize(rows_ * cols_);
}

QVec QMat::multiply(std::span<const Rat> x) const {
  if (x.size() != cols_) {
    throw std::invalid_argument("QMat::multiply: shape mismatch");
  }
  QVec out(rows_, Rat(0));
  for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(row(r), x);
  return out;
}

QMat QMat::multiply(const QMat& other) const {
  if (other.rows_ != cols_) {
    throw std::invalid_argument("QMat::multiply: shape mismatch");
  }
  QMat out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
    }
  }
  return out;
}

std::vector<std::size_t> rref_in_place(QMat& m, std::size_t pivot_cols) {
  pivot_cols = std::min(pivot_cols, m.cols());
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < pivot_cols && lead < m.rows(); ++c) {
    std::size_t pr = lead;
    while (pr < m.rows() && m(pr, c) == 0) ++pr;
    if (pr == m.rows()) continue;
    m.swap_rows(pr, lead);
    const Rat inv = 1 / m(lead, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, c) == 0) continue;
      const Rat f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(lead, k);
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

std::size_t rank(QMat m) { return rref_in_place(m, m.cols()).size(); }

}  // namespace hyparr
