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

#pragma once

// Dense Boolean matrices with bitset rows.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace reseng {

class BoolMatrix {
 public:
  BoolMatrix() = default;
  BoolMatrix(std::size_t rows, std::size_t cols);

  static BoolMatrix identity(std::size_t n);
  // Rows of '0'/'1' characters.
  static BoolMatrix from_rows(const std::vector<std::string>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, bool value = true);

  BoolMatrix transpose() const;
  // Boolean product (OR of ANDs).
  BoolMatrix operator*(const BoolMatrix& rhs) const;
  bool operator==(const BoolMatrix& rhs) const = default;

  bool all_true() const;
  std::size_t count() const;
  std::vector<std::string> to_rows() const;

 private:
  std::size_t words() const noexcept { return (cols_ + 63) / 64; }
  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words(); }
  std::uint64_t* row(std::size_t i) { return bits_.data() + i * words(); }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace reseng
