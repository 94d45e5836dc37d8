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


#include "reseng/unitary.hpp"

#include <cmath>

#include "reseng/errors.hpp"

namespace reseng {

double unitarity_defect(const CMatrix& m) {
  const auto d = m.rows();
  return (m.adjoint() * m - CMatrix::Identity(d, d)).norm();
}

UnitaryMatrix::UnitaryMatrix(CMatrix m, double tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw DimensionError("unitary must be square");
  if (m_.rows() < 1) throw DimensionError("unitary must be non-empty");
  if (!m_.allFinite()) throw DomainError("unitary has non-finite entries");
  const double defect = unitarity_defect(m_);
  if (!(defect <= tol)) {
    throw DomainError("matrix is not unitary (defect " + std::to_string(defect) + ")");
  }
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return UnitaryMatrix(CMatrix::Identity(n, n));
}

UnitaryMatrix UnitaryMatrix::fourier(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  CMatrix f(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto e = static_cast<double>((j * k) % n);
      f(j, k) = std::polar(scale, kTwoPi * e / static_cast<double>(d));
    }
  }
  return UnitaryMatrix(std::move(f));
}

UnitaryMatrix UnitaryMatrix::adjoint() const { return UnitaryMatrix(m_.adjoint()); }

double wrap_phase(double theta) {
  if (!std::isfinite(theta)) throw DomainError("phase is not finite");
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

DiagonalUnitary::DiagonalUnitary(std::vector<double> phases) : phases_(std::move(phases)) {
  if (phases_.empty()) throw DimensionError("diagonal unitary is empty");
  for (double& t : phases_) t = wrap_phase(t);
}

CVector DiagonalUnitary::diagonal() const {
  CVector v(static_cast<Eigen::Index>(phases_.size()));
  for (std::size_t k = 0; k < phases_.size(); ++k) {
    v(static_cast<Eigen::Index>(k)) = std::polar(1.0, phases_[k]);
  }
  return v;
}

CMatrix DiagonalUnitary::matrix() const { return diagonal().asDiagonal(); }

}  // namespace reseng
