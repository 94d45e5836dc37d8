// Copyright 2026 The reseng Authors
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


#include "reseng/boolean_matrix.hpp"

#include <bit>

#include "reseng/errors.hpp"

namespace reseng {

BoolMatrix::BoolMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), bits_(rows * ((cols + 63) / 64), 0) {}

BoolMatrix BoolMatrix::identity(std::size_t n) {
  BoolMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BoolMatrix BoolMatrix::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) return {};
  BoolMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DimensionError("ragged Boolean matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) {
      const char c = rows[i][j];
      if (c != '0' && c != '1') throw DomainError("Boolean matrix entries must be 0 or 1");
      m.set(i, j, c == '1');
    }
  }
  return m;
}

bool BoolMatrix::get(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw DimensionError("Boolean matrix index out of range");
  return (row(i)[j / 64] >> (j % 64)) & 1U;
}

void BoolMatrix::set(std::size_t i, std::size_t j, bool value) {
  if (i >= rows_ || j >= cols_) throw DimensionError("Boolean matrix index out of range");
  const std::uint64_t mask = std::uint64_t{1} << (j % 64);
  if (value) {
    row(i)[j / 64] |= mask;
  } else {
    row(i)[j / 64] &= ~mask;
  }
}

BoolMatrix BoolMatrix::transpose() const {
  BoolMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (get(i, j)) t.set(j, i);
    }
  }
  return t;
}

BoolMatrix BoolMatrix::operator*(const BoolMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("Boolean product dimension mismatch");
  BoolMatrix out(rows_, rhs.cols_);
  const std::size_t w = rhs.words();
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t* dst = out.row(i);
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!get(i, k)) continue;
      const std::uint64_t* src = rhs.row(k);
      for (std::size_t x = 0; x < w; ++x) dst[x] |= src[x];
    }
  }
  return out;
}

bool BoolMatrix::all_true() const { return count() == rows_ * cols_; }

std::size_t BoolMatrix::count() const {
  std::size_t n = 0;
  for (std::uint64_t word : bits_) n += static_cast<std::size_t>(std::popcount(word));
  return n;
}

std::vector<std::string> BoolMatrix::to_rows() const {
  std::vector<std::string> out(rows_, std::string(cols_, '0'));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (get(i, j)) out[i][j] = '1';
    }
  }
  return out;
}

}  // namespace reseng
