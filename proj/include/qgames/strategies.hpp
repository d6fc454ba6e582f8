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

#ifndef QGAMES_STRATEGIES_HPP_
#define QGAMES_STRATEGIES_HPP_

#include <array>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qgames/qcore.hpp"

namespace qgames {

struct ClassicalPure {
  int bit;
};
struct ClassicalMixed {
  double flip_probability;
};
struct Unitary {
  Mat2 matrix;
};
struct Channel {
  std::vector<Mat2> kraus;
};

// One player's move on their qubit. Construct through the factories, which
// enforce unitarity / trace preservation / probability range.
class Strategy {
 public:
  using Variant = std::variant<ClassicalPure, ClassicalMixed, Unitary, Channel>;

  static Strategy pure(int bit);
  static Strategy mixed(double flip_probability);
  static Strategy unitary(const Mat2& u);
  static Strategy channel(std::vector<Mat2> kraus);

  const Variant& variant() const { return value_; }

  // Pure actions count as the unitaries I and F.
  bool is_coherent() const;
  // The 2x2 unitary for coherent strategies.
  std::optional<Mat2> as_unitary() const;
  // Kraus form of any strategy. A mixture p becomes {sqrt(1-p) I, sqrt(p) F}.
  std::vector<Mat2> kraus() const;

  std::string describe() const;

 private:
  explicit Strategy(Variant v) : value_(std::move(v)) {}
  Variant value_;
};

using StrategyProfile = std::vector<Strategy>;

// Unit quaternion for n0 I + i (n1 sx + n2 sy + n3 sz).
struct Quaternion {
  double n0 = 1.0;
  double n1 = 0.0;
  double n2 = 0.0;
  double n3 = 0.0;

  double norm() const;
  Quaternion operator-() const { return {-n0, -n1, -n2, -n3}; }
};

// The two-angle form a_A (b_A i sx + b_B i sy) + a_B (g_A I + g_B i sz) with
// a_B = +sqrt(1 - a_A^2).
struct TwoAngleParams {
  double alpha_a = 0.0;
  double beta_a = 1.0;
  double beta_b = 0.0;
  double gamma_a = 1.0;
  double gamma_b = 0.0;

  double alpha_b() const;
};

Mat2 su2_matrix(const Quaternion& q);
Strategy su2_from_quaternion(const Quaternion& q);

// Quaternion of u / sqrt(det u), with n0 >= 0. Throws on non-unitary input.
Quaternion quaternion_from_unitary(const Mat2& u);

Quaternion to_quaternion(const TwoAngleParams& params);
Strategy from_two_angle(const TwoAngleParams& params);

// I, F (= sx), H (= (sx + sz)/sqrt2), IY (= i sy), A (the four-player
// minority equilibrium move).
Strategy named_strategy(std::string_view name);
Mat2 named_matrix(std::string_view name);

inline constexpr std::size_t kStinespringParams = 32;
inline constexpr int kStinespringEnvDim = 4;

// Reads 32 reals as an 8x2 complex isometry V (row-major re/im pairs, row
// index = 4*system + environment), Gram-Schmidt orthonormalizes the columns
// and returns the Kraus operators A_k = (I ⊗ <k|) V, dropping zero ones.
Strategy channel_from_stinespring(std::span<const double> params);
// Inverse packing for up to four Kraus operators.
std::array<double, kStinespringParams> stinespring_params(
    std::span<const Mat2> kraus);

// Probability that the strategy alone takes |0> to |1>.
double effective_flip_probability(const Strategy& s);

// Global phase fixed so the first nonzero entry (row-major) is real > 0.
Mat2 canonical_phase(const Mat2& u);
bool equal_up_to_phase(const Mat2& a, const Mat2& b, double tol = 1e-10);

// Choi matrix sum_k |A_k>><<A_k| / 2; unit trace, phase and
// Kraus-representation independent.
ComplexMatrix choi_matrix(const Strategy& s);
// Frobenius distance between Choi matrices.
double strategy_distance(const Strategy& a, const Strategy& b);

// Grammar: I F H A IY | U(n0,n1,n2,n3) | M(p) | K(<file>).
// Relative Kraus paths resolve against `base_dir`.
Strategy parse_strategy(std::string_view token,
                        const std::filesystem::path& base_dir = {});
// Comma-separated list, one entry per player.
StrategyProfile parse_profile(std::string_view spec,
                              const std::filesystem::path& base_dir = {});

// One Kraus operator per non-blank line: 8 reals, row-major re/im pairs.
std::vector<Mat2> parse_kraus_text(std::string_view text);
std::vector<Mat2> load_kraus_file(const std::filesystem::path& path);

}  // namespace qgames

#endif  // QGAMES_STRATEGIES_HPP_
