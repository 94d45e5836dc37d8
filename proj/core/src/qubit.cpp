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


#include "reseng/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "reseng/errors.hpp"

namespace reseng {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleEps = 1e-13;

double norm3(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

void check_alpha(double alpha_axis) {
  if (!(alpha_axis > 0.0 && alpha_axis <= kPi / 2.0)) {
    throw DomainError("alpha_axis must lie in (0, pi/2]");
  }
}

CMatrix su2(Complex a, Complex b) {
  CMatrix w(2, 2);
  w << a, b, -std::conj(b), std::conj(a);
  return w;
}

// Reduce modulo pi into [0, pi); R(theta + pi) = -R(theta).
double reduce_half_turn(double theta) {
  double r = std::fmod(theta, kPi);
  if (r < 0.0) r += kPi;
  if (r >= kPi) r = 0.0;
  return r;
}

bool negligible(double theta) { return theta < kAngleEps || kPi - theta < kAngleEps; }

std::vector<Stroke> canonicalise(std::vector<Stroke> ops) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Stroke> out;
    for (const Stroke& s : ops) {
      if (!out.empty() && out.back().axis == s.axis) {
        out.back().angle += s.angle;
        changed = true;
      } else {
        out.push_back(s);
      }
    }
    std::vector<Stroke> kept;
    for (Stroke s : out) {
      s.angle = reduce_half_turn(s.angle);
      if (negligible(s.angle)) {
        changed = true;
        continue;
      }
      kept.push_back(s);
    }
    ops = std::move(kept);
  }
  return ops;
}

// z(delta), then per piece z(-delta_i) n(theta_i) z(-beta_i), then z(beta), application order.
std::vector<Stroke> raw_chain(const EulerAngles& e, double alpha_axis) {
  std::vector<Stroke> ops;
  ops.push_back({StrokeAxis::z, e.delta});
  const double gamma = e.gamma;
  std::size_t k = 0;
  if (gamma > kAngleEps) {
    k = static_cast<std::size_t>(std::ceil(gamma / alpha_axis - 1e-12));
    k = std::max<std::size_t>(k, 1);
  }
  const Vec3 n = tilted_axis(alpha_axis);
  const double sa = std::sin(alpha_axis);
  for (std::size_t i = 0; i < k; ++i) {
    const double piece =
        (i + 1 < k) ? alpha_axis : gamma - static_cast<double>(k - 1) * alpha_axis;
    const double theta = std::asin(std::clamp(std::sin(piece) / sa, -1.0, 1.0));
    const EulerAngles ei = euler_zxz(rotation_matrix(Rotation(n, theta)));
    ops.push_back({StrokeAxis::z, -ei.delta});
    ops.push_back({StrokeAxis::n, theta});
    ops.push_back({StrokeAxis::z, -ei.beta});
  }
  ops.push_back({StrokeAxis::z, e.beta});
  return ops;
}

}  // namespace

Vec3 tilted_axis(double alpha_axis) { return {std::sin(alpha_axis), 0.0, std::cos(alpha_axis)}; }

Rotation::Rotation(Vec3 axis_, double angle_) : axis(axis_), angle(angle_) {
  if (std::abs(norm3(axis) - 1.0) > 1e-12) throw DomainError("rotation axis must be a unit vector");
  if (!std::isfinite(angle)) throw DomainError("rotation angle must be finite");
}

UnitaryMatrix rotation_matrix(const Rotation& r) {
  const double c = std::cos(r.angle);
  const double s = std::sin(r.angle);
  const Complex i(0.0, 1.0);
  const auto& n = r.axis;
  CMatrix m(2, 2);
  m(0, 0) = c + i * s * n[2];
  m(0, 1) = i * s * Complex(n[0], -n[1]);
  m(1, 0) = i * s * Complex(n[0], n[1]);
  m(1, 1) = c - i * s * n[2];
  return UnitaryMatrix(std::move(m));
}

EulerAngles euler_zxz(const UnitaryMatrix& V) {
  if (V.dim() != 2) throw DimensionError("Euler decomposition needs a 2x2 unitary");
  const CMatrix& v = V.matrix();
  const Complex det = v(0, 0) * v(1, 1) - v(0, 1) * v(1, 0);
  const CMatrix w = v * std::polar(1.0, -std::arg(det) / 2.0);
  const Complex a = w(0, 0);
  const Complex b = w(0, 1);
  EulerAngles e;
  e.gamma = std::atan2(std::abs(b), std::abs(a));
  constexpr double tiny = 1e-15;
  if (std::abs(b) <= tiny) {
    e.beta = std::arg(a);
    e.delta = 0.0;
  } else if (std::abs(a) <= tiny) {
    e.beta = std::arg(b) - kPi / 2.0;
    e.delta = 0.0;
  } else {
    const double s = std::arg(a);
    const double t = std::arg(b) - kPi / 2.0;
    e.beta = 0.5 * (s + t);
    e.delta = 0.5 * (s - t);
  }
  e.beta = wrap_phase(e.beta);
  e.delta = wrap_phase(e.delta);
  const CMatrix p = euler_compose(e).matrix();
  e.global_phase = std::arg((p.adjoint() * v).trace());
  return e;
}

UnitaryMatrix euler_compose(const EulerAngles& e) {
  const CMatrix m = rotation_matrix(Rotation(kAxisZ, e.beta)).matrix() *
                    rotation_matrix(Rotation(kAxisX, e.gamma)).matrix() *
                    rotation_matrix(Rotation(kAxisZ, e.delta)).matrix();
  return UnitaryMatrix(std::polar(1.0, e.global_phase) * m);
}

Rotation StrokePlan::rotation(std::size_t k) const {
  const Stroke& s = strokes.at(k);
  return Rotation(s.axis == StrokeAxis::z ? kAxisZ : tilted_axis(alpha_axis), s.angle);
}

CMatrix StrokePlan::product() const {
  CMatrix acc = CMatrix::Identity(2, 2);
  for (std::size_t k = 0; k < strokes.size(); ++k) acc = rotation_matrix(rotation(k)).matrix() * acc;
  return acc;
}

bool StrokePlan::alternates() const {
  for (std::size_t k = 1; k < strokes.size(); ++k) {
    if (strokes[k].axis == strokes[k - 1].axis) return false;
  }
  return true;
}

double phase_invariant_distance(const CMatrix& a, const CMatrix& b) {
  const Complex overlap = (b.adjoint() * a).trace();
  const double phi = std::abs(overlap) > 0.0 ? std::arg(overlap) : 0.0;
  return (a - std::polar(1.0, phi) * b).norm();
}

std::size_t unitary_length_bound(double alpha_axis) {
  check_alpha(alpha_axis);
  return 2 * static_cast<std::size_t>(std::ceil(kPi / (2.0 * alpha_axis) - 1e-12)) + 1;
}

std::size_t sharp_length_bound(double alpha_axis) {
  check_alpha(alpha_axis);
  return static_cast<std::size_t>(std::ceil(kPi / alpha_axis - 1e-12)) + 1;
}

std::size_t state_length_bound(double alpha_axis) {
  check_alpha(alpha_axis);
  return static_cast<std::size_t>(std::ceil(kPi / (2.0 * alpha_axis) - 1e-12)) + 1;
}

StrokePlan synthesize_unitary(const UnitaryMatrix& V, double alpha_axis) {
  check_alpha(alpha_axis);
  if (V.dim() != 2) throw DimensionError("qubit synthesis needs a 2x2 unitary");
  StrokePlan plan;
  plan.alpha_axis = alpha_axis;
  plan.strokes = canonicalise(raw_chain(euler_zxz(V), alpha_axis));
  plan.bound = unitary_length_bound(alpha_axis);
  plan.meets_sharp_bound = plan.size() <= sharp_length_bound(alpha_axis);
  return plan;
}

StatePlan synthesize_state(const CVector& target, double alpha_axis) {
  check_alpha(alpha_axis);
  if (target.size() != 2) throw DimensionError("qubit state needs two amplitudes");
  if (std::abs(target.norm() - 1.0) > 1e-10) throw DomainError("target state must be normalised");
  const Complex p0 = target(0);
  const Complex p1 = target(1);
  StatePlan out;
  out.pole = std::norm(p0) >= 0.5 ? 0 : 1;
  const CMatrix v = out.pole == 0 ? su2(p0, -std::conj(p1)) : su2(std::conj(p1), p0);
  std::vector<Stroke> ops = canonicalise(raw_chain(euler_zxz(UnitaryMatrix(v)), alpha_axis));
  // z rotations only rephase the starting pole.
  if (!ops.empty() && ops.front().axis == StrokeAxis::z) ops.erase(ops.begin());
  if (ops.size() == 1 && ops.front().axis == StrokeAxis::z) ops.clear();
  out.plan.alpha_axis = alpha_axis;
  out.plan.strokes = std::move(ops);
  out.plan.bound = state_length_bound(alpha_axis);
  out.plan.meets_sharp_bound = out.plan.size() <= out.plan.bound;
  CVector start = CVector::Zero(2);
  start(out.pole) = 1.0;
  out.fidelity = std::norm(target.dot(out.plan.product() * start));
  return out;
}

bool three_stroke_feasible(double phi) { return phi >= kPi / 8.0 && phi <= 3.0 * kPi / 8.0; }

double alpha_axis_from_phi(double phi) { return 2.0 * phi; }

double phi_from_alpha_axis(double alpha_axis) { return 0.5 * alpha_axis; }

UnitaryMatrix qubit_family(double phi, double p0, double p1, double g) {
  CMatrix u(2, 2);
  u(0, 0) = std::polar(std::cos(phi), p0);
  u(0, 1) = -std::polar(std::sin(phi), -p1);
  u(1, 0) = std::polar(std::sin(phi), p1);
  u(1, 1) = std::polar(std::cos(phi), -p0);
  return UnitaryMatrix(std::polar(1.0, g) * u);
}

Vec3 max_mutual_qubit(const Vec3& m, const Vec3& n) {
  const Vec3 c{m[1] * n[2] - m[2] * n[1], m[2] * n[0] - m[0] * n[2], m[0] * n[1] - m[1] * n[0]};
  const double len = norm3(c);
  if (!(len > 1e-12)) throw DomainError("axes are parallel");
  return {c[0] / len, c[1] / len, c[2] / len};
}

CVector bloch_state(const Vec3& r) {
  const double len = norm3(r);
  if (std::abs(len - 1.0) > 1e-12) throw DomainError("Bloch vector must be a unit vector");
  const double theta = std::acos(std::clamp(r[2] / len, -1.0, 1.0));
  const double phi = std::atan2(r[1], r[0]);
  CVector psi(2);
  psi(0) = std::cos(theta / 2.0);
  psi(1) = std::polar(std::sin(theta / 2.0), phi);
  return psi;
}

Vec3 bloch_vector(const CVector& psi) {
  if (psi.size() != 2) throw DimensionError("Bloch vector needs a qubit state");
  const Complex a = psi(0);
  const Complex b = psi(1);
  const Complex ab = std::conj(a) * b;
  return {2.0 * ab.real(), 2.0 * ab.imag(), std::norm(a) - std::norm(b)};
}

}  // namespace reseng
