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

#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "qgames/equilibria.hpp"
#include "oracle.hpp"

namespace qgames {
namespace {

constexpr Complex kI{0.0, 1.0};

Mat2 matrix_of(const Strategy& s) { return *s.as_unitary(); }

double max_abs(const Mat2& m) { return m.cwiseAbs().maxCoeff(); }

TEST(Quaternion, IdentityAndFlip) {
  EXPECT_EQ(matrix_of(su2_from_quaternion({1, 0, 0, 0})), identity2());
  const Mat2 ix = matrix_of(su2_from_quaternion({0, 1, 0, 0}));
  EXPECT_LT(max_abs(ix - kI * pauli_x()), 1e-15);
  EXPECT_TRUE(equal_up_to_phase(ix, pauli_x()));
}

TEST(Quaternion, RejectsNonUnit) {
  EXPECT_THROW(su2_from_quaternion({1, 1, 0, 0}), Error);
}

TEST(Quaternion, RoundTripThroughUnitary) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    const Mat2 u = oracle::random_unitary2(rng);
    const Quaternion q = quaternion_from_unitary(u);
    EXPECT_NEAR(q.norm(), 1.0, 1e-12);
    EXPECT_TRUE(equal_up_to_phase(su2_matrix(q), u, 1e-12));
  }
}

TEST(NamedStrategy, MinorityMoveMatchesItsQuaternion) {
  const double c = std::cos(std::numbers::pi / 16) / std::numbers::sqrt2;
  const double s = std::sin(std::numbers::pi / 16) / std::numbers::sqrt2;
  EXPECT_LT(max_abs(named_matrix("A") - su2_matrix({c, c, -s, -s})), 1e-15);
  // The printed form cos(I + i sx) + sin(i sy - i sz) is the transpose.
  const Mat2 printed = (std::cos(std::numbers::pi / 16) *
                            (identity2() + kI * pauli_x()) +
                        std::sin(std::numbers::pi / 16) *
                            (kI * pauli_y() - kI * pauli_z())) /
                       std::numbers::sqrt2;
  EXPECT_LT(max_abs(printed - su2_matrix({c, c, s, -s})), 1e-15);
  EXPECT_LT(max_abs(named_matrix("A") - printed.transpose()), 1e-15);
}

TEST(NamedStrategy, Basics) {
  const Mat2 f = named_matrix("F");
  EXPECT_EQ(f * Eigen::Vector2cd(1, 0), Eigen::Vector2cd(0, 1));
  EXPECT_TRUE(is_unitary(named_matrix("A"), 1e-12));
  const Mat2 h = named_matrix("H");
  EXPECT_LT(max_abs(h * h - identity2()), 1e-12);
  EXPECT_LT(max_abs(named_matrix("IY") - kI * pauli_y()), 1e-15);
  EXPECT_EQ(named_matrix("I"), identity2());
  EXPECT_THROW(named_strategy("Q"), ParseError);
}

TEST(TwoAngleParams, SimpleCases) {
  EXPECT_LT(max_abs(matrix_of(from_two_angle({0, 1, 0, 1, 0})) - identity2()),
            1e-15);
  EXPECT_LT(max_abs(matrix_of(from_two_angle({1, 1, 0, 1, 0})) -
                    kI * pauli_x()),
            1e-15);
  EXPECT_THROW(from_two_angle({0.5, 1, 1, 1, 0}), Error);
  EXPECT_THROW(from_two_angle({0.5, 1, 0, 0.5, 0}), Error);
  EXPECT_THROW(from_two_angle({1.5, 1, 0, 1, 0}), Error);
}

TwoAngleParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> a(-1, 1);
  const double b = angle(rng), g = angle(rng);
  return {a(rng), std::cos(b), std::sin(b), std::cos(g), std::sin(g)};
}

TEST(TwoAngleParams, FlipProbabilityIsAlphaSquared) {
  std::mt19937_64 rng(100);
  for (int k = 0; k < 100; ++k) {
    const TwoAngleParams p = random_params(rng);
    const Mat2 u = matrix_of(from_two_angle(p));
    // |<1|U|0>|^2, straight from the matrix.
    EXPECT_NEAR(std::norm(u(1, 0)), p.alpha_a * p.alpha_a, 1e-12);
    EXPECT_NEAR(effective_flip_probability(from_two_angle(p)),
                p.alpha_a * p.alpha_a, 1e-12);
  }
}

TEST(TwoAngleParams, AgreesWithQuaternionMapping) {
  std::mt19937_64 rng(1000);
  for (int k = 0; k < 1000; ++k) {
    const TwoAngleParams p = random_params(rng);
    const Mat2 direct = matrix_of(from_two_angle(p));
    const Mat2 via_q = su2_matrix(to_quaternion(p));
    EXPECT_TRUE(equal_up_to_phase(direct, via_q, 1e-12));
  }
}

TEST(Stinespring, IdentityEncoding) {
  std::array<double, kStinespringParams> params{};
  // V = I ⊗ |0>: row 4*s + 0 of column s is 1.
  params[2 * (2 * 0 + 0)] = 1.0;
  params[2 * (2 * 4 + 1)] = 1.0;
  const Strategy s = channel_from_stinespring(params);
  const auto kraus = s.kraus();
  ASSERT_EQ(kraus.size(), 1u);
  EXPECT_LT(max_abs(kraus[0] - identity2()), 1e-15);
}

TEST(Stinespring, FlipEncoding) {
  std::array<double, kStinespringParams> params{};
  // V = sx ⊗ |0>: column 0 -> row 4, column 1 -> row 0.
  params[2 * (2 * 4 + 0)] = 1.0;
  params[2 * (2 * 0 + 1)] = 1.0;
  const auto kraus = channel_from_stinespring(params).kraus();
  ASSERT_EQ(kraus.size(), 1u);
  EXPECT_LT(max_abs(kraus[0] - pauli_x()), 1e-15);
}

TEST(Stinespring, RandomParametersGiveValidChannels) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  for (int k = 0; k < 100; ++k) {
    std::array<double, kStinespringParams> params;
    for (double& x : params) x = g(rng);
    const Strategy s = channel_from_stinespring(params);
    const auto kraus = s.kraus();
    EXPECT_TRUE(is_cptp(kraus, 1e-10));
    const auto rho = DensityOperator::from_pure(StateVector(oracle::random_state(rng, 2)));
    EXPECT_NEAR(apply_local_channel(rho, kraus, k % 2).trace(), 1.0, 1e-10);
  }
}

TEST(Stinespring, PackingRoundTrip) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 20; ++k) {
    const Strategy s = random_channel_strategy(rng);
    const Strategy back = channel_from_stinespring(stinespring_params(s.kraus()));
    EXPECT_LT(strategy_distance(s, back), 1e-12);
  }
}

TEST(Stinespring, DegenerateInputRejected) {
  std::array<double, kStinespringParams> zeros{};
  EXPECT_THROW(channel_from_stinespring(zeros), Error);
  std::array<double, kStinespringParams> rank_one{};
  rank_one[0] = 1.0;  // column 0 = e_0
  rank_one[2] = 2.0;  // column 1 = 2 e_0
  EXPECT_THROW(channel_from_stinespring(rank_one), Error);
  EXPECT_THROW(channel_from_stinespring(std::vector<double>(31, 1.0)), Error);
}

TEST(EffectiveFlip, Cases) {
  EXPECT_EQ(effective_flip_probability(named_strategy("F")), 1.0);
  // |a_10|^2 = cos^2(pi/16)/2 + sin^2(pi/16)/2
  const double expected =
      std::pow(std::cos(std::numbers::pi / 16), 2) / 2 +
      std::pow(std::sin(std::numbers::pi / 16), 2) / 2;
  EXPECT_NEAR(effective_flip_probability(named_strategy("A")), expected, 1e-15);
  EXPECT_NEAR(expected, 0.5, 1e-15);
  EXPECT_EQ(effective_flip_probability(Strategy::mixed(0.3)), 0.3);
  EXPECT_EQ(effective_flip_probability(Strategy::pure(1)), 1.0);
}

TEST(StrategyVariant, KrausForms) {
  EXPECT_EQ(Strategy::pure(0).kraus().size(), 1u);
  const auto mix = Strategy::mixed(0.25).kraus();
  EXPECT_EQ(mix.size(), 2u);
  EXPECT_TRUE(is_cptp(mix));
  EXPECT_TRUE(Strategy::pure(1).is_coherent());
  EXPECT_FALSE(Strategy::mixed(0.25).is_coherent());
  EXPECT_THROW(Strategy::mixed(1.2), Error);
  EXPECT_THROW(Strategy::pure(2), Error);
  EXPECT_THROW(Strategy::unitary(Mat2(Mat2::Ones())), Error);
  EXPECT_THROW(Strategy::channel({Mat2(0.5 * identity2())}), Error);
}

TEST(Phase, CanonicalRepresentative) {
  const Mat2 u = named_matrix("A");
  const Mat2 rotated = std::polar(1.0, 0.7) * u;
  EXPECT_LT(max_abs(canonical_phase(u) - canonical_phase(rotated)), 1e-15);
  EXPECT_GT(canonical_phase(rotated)(0, 0).real(), 0.0);
  EXPECT_EQ(canonical_phase(rotated)(0, 0).imag(), 0.0);
  EXPECT_LT(strategy_distance(Strategy::unitary(u), Strategy::unitary(rotated)),
            1e-15);
  EXPECT_GT(strategy_distance(named_strategy("I"), named_strategy("F")), 0.5);
}

TEST(Grammar, Tokens) {
  const auto profile = parse_profile("I, F,H,A,IY,U(1,0,0,0),M(0.25)");
  ASSERT_EQ(profile.size(), 7u);
  EXPECT_EQ(matrix_of(profile[1]), pauli_x());
  EXPECT_EQ(effective_flip_probability(profile[6]), 0.25);
  // U() normalizes what the user typed.
  const auto u = parse_strategy("U(0.7071, 0.7071, 0, 0)");
  EXPECT_TRUE(is_unitary(*u.as_unitary(), 1e-12));
}

TEST(Grammar, Errors) {
  for (const char* bad : {"X", "U(1,0,0)", "U(0,0,0,0)", "M(2)", "M(a)", "",
                          "K()", "K(/nonexistent/kraus.txt)"}) {
    EXPECT_THROW(parse_strategy(bad), ParseError) << bad;
  }
  try {
    parse_profile("I,Z,F");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.token(), "Z");
  }
}

TEST(Grammar, KrausFile) {
  const auto dir = std::filesystem::temp_directory_path() / "qgames_kraus_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "dephase.txt");
    out.precision(17);
    const double h = std::sqrt(0.5);
    out << "# sqrt(1/2) I\n"
        << h << " 0 0 0 0 0 " << h << " 0\n"
        << h << " 0 0 0 0 0 " << -h << " 0\n";
  }
  const auto s = parse_strategy("K(dephase.txt)", dir);
  ASSERT_EQ(s.kraus().size(), 2u);
  EXPECT_FALSE(s.is_coherent());
  EXPECT_NEAR(effective_flip_probability(s), 0.0, 1e-15);
  {
    std::ofstream out(dir / "lossy.txt");
    out << "0.5 0 0 0 0 0 0.5 0\n";
  }
  EXPECT_THROW(parse_strategy("K(lossy.txt)", dir), ParseError);
  EXPECT_THROW(parse_kraus_text("1 0 0 0 0 0 1\n"), ParseError);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace qgames
