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

// Two-axis qubit coherence engine: rotations about z and n = (sin a, 0, cos a).

#include <array>
#include <cstddef>
#include <vector>

#include "reseng/unitary.hpp"

namespace reseng {

using Vec3 = std::array<double, 3>;

inline constexpr Vec3 kAxisZ{0.0, 0.0, 1.0};
inline constexpr Vec3 kAxisX{1.0, 0.0, 0.0};
inline constexpr Vec3 kAxisY{0.0, 1.0, 0.0};

Vec3 tilted_axis(double alpha_axis);

// exp(i angle axis.sigma).
struct Rotation {
  Vec3 axis = kAxisZ;
  double angle = 0.0;

  Rotation() = default;
  Rotation(Vec3 axis, double angle);  // throws unless |axis| = 1 within 1e-12
};

UnitaryMatrix rotation_matrix(const Rotation& r);

struct EulerAngles {
  double beta = 0.0;    // [0, 2 pi)
  double gamma = 0.0;   // [0, pi/2]
  double delta = 0.0;   // [0, 2 pi)
  double global_phase = 0.0;
};

// V = e^{i phase} R_z(beta) R_x(gamma) R_z(delta).
EulerAngles euler_zxz(const UnitaryMatrix& V);
UnitaryMatrix euler_compose(const EulerAngles& e);

enum class StrokeAxis { z, n };

struct Stroke {
  StrokeAxis axis = StrokeAxis::z;
  double angle = 0.0;
};

// Strokes in application order (first applied first).
struct StrokePlan {
  double alpha_axis = 0.0;
  std::vector<Stroke> strokes;
  std::size_t bound = 0;   // guaranteed length bound of the construction
  bool meets_sharp_bound = false;  // length <= ceil(pi / alpha) + 1 (unitaries only)

  std::size_t size() const noexcept { return strokes.size(); }
  Rotation rotation(std::size_t k) const;
  // R_last ... R_first.
  CMatrix product() const;
  bool alternates() const;
};

// min over global phases of ||A - e^{i phi} B||_F.
double phase_invariant_distance(const CMatrix& a, const CMatrix& b);

std::size_t unitary_length_bound(double alpha_axis);  // 2 ceil(pi / (2 alpha)) + 1
std::size_t sharp_length_bound(double alpha_axis);    // ceil(pi / alpha) + 1
std::size_t state_length_bound(double alpha_axis);    // ceil(pi / (2 alpha)) + 1

StrokePlan synthesize_unitary(const UnitaryMatrix& V, double alpha_axis);

struct StatePlan {
  int pole = 0;  // starting basis state |0> or |1>
  StrokePlan plan;
  double fidelity = 0.0;
};

StatePlan synthesize_state(const CVector& target, double alpha_axis);

// phi of the qubit family U(phi); the axis tilt is alpha_axis = 2 phi.
bool three_stroke_feasible(double phi);
double alpha_axis_from_phi(double phi);
double phi_from_alpha_axis(double alpha_axis);

// U(phi) = e^{i g} [[e^{i p0} cos phi, -e^{-i p1} sin phi], [e^{i p1} sin phi, e^{-i p0} cos phi]].
UnitaryMatrix qubit_family(double phi, double p0 = 0.0, double p1 = 0.0, double g = 0.0);

// Bloch vector m x n / |m x n|.
Vec3 max_mutual_qubit(const Vec3& m, const Vec3& n);
// Pure state with the given Bloch vector.
CVector bloch_state(const Vec3& r);
Vec3 bloch_vector(const CVector& psi);

}  // namespace reseng
