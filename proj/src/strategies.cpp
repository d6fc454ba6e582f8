// Copyright 2026 The qgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgames/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qgames {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kUnitNormTol = 1e-10;
constexpr double kRankTol = 1e-12;

Mat2 flip_matrix() { return pauli_x(); }

}  // namespace

Strategy Strategy::pure(int bit) {
  if (bit != 0 && bit != 1) throw Error("pure action must be 0 or 1");
  return Strategy(ClassicalPure{bit});
}

Strategy Strategy::mixed(double flip_probability) {
  if (!(flip_probability >= 0.0 && flip_probability <= 1.0)) {
    throw Error("flip probability " + std::to_string(flip_probability) +
                " outside [0,1]");
  }
  return Strategy(ClassicalMixed{flip_probability});
}

Strategy Strategy::unitary(const Mat2& u) {
  if (!is_unitary(u)) throw Error("strategy matrix is not unitary");
  return Strategy(Unitary{u});
}

Strategy Strategy::channel(std::vector<Mat2> kraus) {
  if (!is_cptp(kraus)) {
    throw Error("Kraus operators are not trace preserving");
  }
  return Strategy(Channel{std::move(kraus)});
}

bool Strategy::is_coherent() const {
  return std::holds_alternative<ClassicalPure>(value_) ||
         std::holds_alternative<Unitary>(value_);
}

std::optional<Mat2> Strategy::as_unitary() const {
  if (const auto* p = std::get_if<ClassicalPure>(&value_)) {
    return p->bit ? flip_matrix() : identity2();
  }
  if (const auto* u = std::get_if<Unitary>(&value_)) return u->matrix;
  return std::nullopt;
}

std::vector<Mat2> Strategy::kraus() const {
  if (auto u = as_unitary()) return {*u};
  if (const auto* m = std::get_if<ClassicalMixed>(&value_)) {
    const double p = m->flip_probability;
    std::vector<Mat2> out;
    if (p < 1.0) out.push_back(std::sqrt(1.0 - p) * identity2());
    if (p > 0.0) out.push_back(std::sqrt(p) * flip_matrix());
    return out;
  }
  return std::get<Channel>(value_).kraus;
}

std::string Strategy::describe() const {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ClassicalPure>) {
          return s.bit ? "F" : "I";
        } else if constexpr (std::is_same_v<T, ClassicalMixed>) {
          return "M(" + std::to_string(s.flip_probability) + ")";
        } else if constexpr (std::is_same_v<T, Unitary>) {
          const Quaternion q = quaternion_from_unitary(s.matrix);
          return "U(" + std::to_string(q.n0) + "," + std::to_string(q.n1) +
                 "," + std::to_string(q.n2) + "," + std::to_string(q.n3) + ")";
        } else {
          return "K[" + std::to_string(s.kraus.size()) + " ops]";
        }
      },
      value_);
}

double Quaternion::norm() const {
  return std::sqrt(n0 * n0 + n1 * n1 + n2 * n2 + n3 * n3);
}

double TwoAngleParams::alpha_b() const {
  return std::sqrt(std::max(0.0, 1.0 - alpha_a * alpha_a));
}

Mat2 su2_matrix(const Quaternion& q) {
  Mat2 m;
  m << Complex(q.n0, q.n3), Complex(q.n2, q.n1),
       Complex(-q.n2, q.n1), Complex(q.n0, -q.n3);
  return m;
}

Strategy su2_from_quaternion(const Quaternion& q) {
  if (std::abs(q.norm() - 1.0) > kUnitNormTol) {
    throw Error("quaternion is not unit norm");
  }
  return Strategy::unitary(su2_matrix(q));
}

Quaternion quaternion_from_unitary(const Mat2& u) {
  if (!is_unitary(u)) throw Error("matrix is not unitary");
  const Mat2 v = u / std::sqrt(u.determinant());
  Quaternion q{v(0, 0).real(), v(0, 1).imag(), v(0, 1).real(),
               v(0, 0).imag()};
  if (q.n0 < 0.0) q = -q;
  return q;
}

Quaternion to_quaternion(const TwoAngleParams& p) {
  const double ab = p.alpha_b();
  return {ab * p.gamma_a, p.alpha_a * p.beta_a, p.alpha_a * p.beta_b,
          ab * p.gamma_b};
}

Strategy from_two_angle(const TwoAngleParams& p) {
  if (!(p.alpha_a >= -1.0 && p.alpha_a <= 1.0)) {
    throw Error("alpha_A must lie in [-1, 1]");
  }
  if (std::abs(p.beta_a * p.beta_a + p.beta_b * p.beta_b - 1.0) >
      kUnitNormTol) {
    throw Error("beta_A^2 + beta_B^2 must equal 1");
  }
  if (std::abs(p.gamma_a * p.gamma_a + p.gamma_b * p.gamma_b - 1.0) >
      kUnitNormTol) {
    throw Error("gamma_A^2 + gamma_B^2 must equal 1");
  }
  const double ab = p.alpha_b();
  const Mat2 m = p.alpha_a * (p.beta_a * kI * pauli_x() +
                              p.beta_b * kI * pauli_y()) +
                 ab * (p.gamma_a * identity2() + p.gamma_b * kI * pauli_z());
  return Strategy::unitary(m);
}

Mat2 named_matrix(std::string_view name) {
  if (name == "I") return identity2();
  if (name == "F") return pauli_x();
  if (name == "H") return (pauli_x() + pauli_z()) / std::numbers::sqrt2;
  if (name == "IY") return kI * pauli_y();
  if (name == "A") {
    // cos(pi/16)(I + i sx) - sin(pi/16)(i sy + i sz), over sqrt 2. With the
    // entangler (I + i F^n)/sqrt2 this sign of the sy term is the one that
    // leaves the four-player register in the eight-term minority state.
    const double c = std::cos(std::numbers::pi / 16) / std::numbers::sqrt2;
    const double s = std::sin(std::numbers::pi / 16) / std::numbers::sqrt2;
    return su2_matrix({c, c, -s, -s});
  }
  throw ParseError("unknown strategy name '" + std::string(name) +
                       "' (expected I, F, H, A or IY)",
                   std::string(name));
}

Strategy named_strategy(std::string_view name) {
  return Strategy::unitary(named_matrix(name));
}

Strategy channel_from_stinespring(std::span<const double> params) {
  if (params.size() != kStinespringParams) {
    throw Error("Stinespring parameterization needs 32 reals");
  }
  constexpr int kRows = 2 * kStinespringEnvDim;
  Eigen::Matrix<Complex, kRows, 2> v;
  for (int r = 0; r < kRows; ++r) {
    for (int c = 0; c < 2; ++c) {
      const std::size_t k = 2 * static_cast<std::size_t>(2 * r + c);
      v(r, c) = Complex(params[k], params[k + 1]);
    }
  }
  const double n0 = v.col(0).norm();
  if (!(n0 > kRankTol)) throw Error("degenerate Stinespring parameters");
  v.col(0) /= n0;
  v.col(1) -= v.col(0).dot(v.col(1)) * v.col(0);
  const double n1 = v.col(1).norm();
  if (!(n1 > kRankTol)) throw Error("degenerate Stinespring parameters");
  v.col(1) /= n1;

  std::vector<Mat2> kraus;
  for (int k = 0; k < kStinespringEnvDim; ++k) {
    Mat2 a;
    for (int s = 0; s < 2; ++s) {
      for (int c = 0; c < 2; ++c) a(s, c) = v(kStinespringEnvDim * s + k, c);
    }
    if (a.squaredNorm() > 1e-28) kraus.push_back(a);
  }
  return Strategy::channel(std::move(kraus));
}

std::array<double, kStinespringParams> stinespring_params(
    std::span<const Mat2> kraus) {
  if (kraus.empty() || kraus.size() > kStinespringEnvDim) {
    throw Error("Stinespring packing supports 1 to 4 Kraus operators");
  }
  std::array<double, kStinespringParams> params{};
  for (std::size_t k = 0; k < kraus.size(); ++k) {
    for (int s = 0; s < 2; ++s) {
      for (int c = 0; c < 2; ++c) {
        const std::size_t r = kStinespringEnvDim * s + k;
        const std::size_t idx = 2 * (2 * r + static_cast<std::size_t>(c));
        params[idx] = kraus[k](s, c).real();
        params[idx + 1] = kraus[k](s, c).imag();
      }
    }
  }
  return params;
}

double effective_flip_probability(const Strategy& s) {
  if (const auto* m = std::get_if<ClassicalMixed>(&s.variant())) {
    return m->flip_probability;
  }
  double p = 0.0;
  for (const Mat2& a : s.kraus()) p += std::norm(a(1, 0));
  return p;
}

Mat2 canonical_phase(const Mat2& u) {
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const double mag = std::abs(u(r, c));
      if (mag > 1e-12) return u * (std::conj(u(r, c)) / mag);
    }
  }
  return u;
}

bool equal_up_to_phase(const Mat2& a, const Mat2& b, double tol) {
  return (canonical_phase(a) - canonical_phase(b)).cwiseAbs().maxCoeff() <=
         tol;
}

ComplexMatrix choi_matrix(const Strategy& s) {
  ComplexMatrix choi = ComplexMatrix::Zero(4, 4);
  for (const Mat2& a : s.kraus()) {
    Eigen::Vector4cd vec;
    vec << a(0, 0), a(0, 1), a(1, 0), a(1, 1);
    choi += vec * vec.adjoint();
  }
  return choi / 2.0;
}

double strategy_distance(const Strategy& a, const Strategy& b) {
  return (choi_matrix(a) - choi_matrix(b)).norm();
}

}  // namespace qgames
