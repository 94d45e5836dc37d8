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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace reseng {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;

inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// d x d complex matrix with ||U^dagger U - I||_F <= tol.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(CMatrix m, double tol = kUnitaryTol);

  static UnitaryMatrix identity(std::size_t d);
  // F_jk = omega^{jk} / sqrt(d), omega = exp(2 pi i / d), indices from 0.
  static UnitaryMatrix fourier(std::size_t d);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  const CMatrix& matrix() const noexcept { return m_; }
  Complex operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  UnitaryMatrix adjoint() const;

 private:
  CMatrix m_;
};

double unitarity_defect(const CMatrix& m);

// diag(exp(i theta_1), ..., exp(i theta_d)); phases are stored reduced to [0, 2 pi).
class DiagonalUnitary {
 public:
  explicit DiagonalUnitary(std::vector<double> phases);

  std::size_t dim() const noexcept { return phases_.size(); }
  const std::vector<double>& phases() const noexcept { return phases_; }
  CVector diagonal() const;
  CMatrix matrix() const;

 private:
  std::vector<double> phases_;
};

double wrap_phase(double theta);

}  // namespace reseng
