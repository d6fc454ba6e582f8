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

#include "qgames/qcore.hpp"

#include <random>

#include "gtest/gtest.h"
#include "oracle.hpp"

namespace qgames {
namespace {

constexpr Complex kI{0.0, 1.0};

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

TEST(Tensor, IdentityTimesIdentity) {
  EXPECT_EQ(tensor(Mat2::Identity(), Mat2::Identity()),
            ComplexMatrix(ComplexMatrix::Identity(4, 4)));
}

TEST(Tensor, FlipFlipTakesZeroZeroToOneOne) {
  const ComplexMatrix xx = tensor(pauli_x(), pauli_x());
  const ComplexVector out = xx * StateVector::basis(2, 0b00).amplitudes();
  EXPECT_EQ(out, StateVector::basis(2, 0b11).amplitudes());
}

TEST(Tensor, TwoQubitEntanglerMatchesEntrywiseExpansion) {
  const ComplexMatrix via_tensor =
      (ComplexMatrix(ComplexMatrix::Identity(4, 4)) +
       kI * tensor(pauli_x(), pauli_x())) /
      std::sqrt(2.0);
  EXPECT_LT(max_abs_diff(via_tensor, oracle::entangler_entrywise(2)), 1e-15);
  EXPECT_LT(max_abs_diff(build_entangler(2), oracle::entangler_entrywise(2)),
            1e-15);
}

TEST(Entangler, RejectsZeroQubits) {
  EXPECT_THROW(build_entangler(0), Error);
}

TEST(Entangler, TwoQubitGhz) {
  const ComplexVector out =
      build_entangler(2) * StateVector::basis(2).amplitudes();
  EXPECT_NEAR(std::abs(out[0] - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(out[3] - kI / std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_EQ(out[1], Complex(0.0));
  EXPECT_EQ(out[2], Complex(0.0));
}

TEST(Entangler, UnitaryAndGhzProducingUpToSixQubits) {
  for (int n = 1; n <= 6; ++n) {
    const ComplexMatrix j = build_entangler(n);
    EXPECT_TRUE(is_unitary(j, 1e-12)) << n;
    const StateVector ghz = apply_entangler(StateVector::basis(n));
    const auto dim = ghz.dim();
    for (Eigen::Index z = 0; z < dim; ++z) {
      Complex expected = 0.0;
      if (z == 0) expected = 1.0 / std::sqrt(2.0);
      if (z == dim - 1) expected = kI / std::sqrt(2.0);
      if (n == 1) expected = z == 0 ? 1.0 / std::sqrt(2.0) : kI / std::sqrt(2.0);
      EXPECT_LT(std::abs(ghz[z] - expected), 1e-15) << n << " " << z;
    }
  }
}

TEST(Entangler, ThreeQubitAdjointInverts) {
  const ComplexMatrix j = build_entangler(3);
  EXPECT_LT(max_abs_diff(j.adjoint() * j, ComplexMatrix::Identity(8, 8)), 1e-12);
}

TEST(Entangler, CommutesWithEveryClassicalFlipPattern) {
  for (int n = 1; n <= 4; ++n) {
    const ComplexMatrix j = build_entangler(n);
    for (Outcome pattern = 0; pattern < (Outcome{1} << n); ++pattern) {
      ComplexMatrix op = ComplexMatrix::Identity(1, 1);
      for (int i = 0; i < n; ++i) {
        op = tensor(op, player_bit(pattern, i, n) ? pauli_x() : identity2());
      }
      EXPECT_LT(max_abs_diff(j * op, op * j), 1e-14) << n << " " << pattern;
    }
  }
}

TEST(Entangler, FourQubitCommutesWithFlipIdentityFlipIdentity) {
  const ComplexMatrix op = tensor(tensor(tensor(pauli_x(), identity2()),
                                         pauli_x()),
                                  identity2());
  const ComplexMatrix j = build_entangler(4);
  EXPECT_LT(max_abs_diff(j * op, op * j), 1e-14);
}

TEST(Entangler, AdjointOnlyMixesComplementaryPairs) {
  const ComplexMatrix jd = build_entangler(4).adjoint();
  const Eigen::Index mask = 15;
  for (Eigen::Index r = 0; r < 16; ++r) {
    for (Eigen::Index c = 0; c < 16; ++c) {
      if (c != r && c != (r ^ mask)) {
        EXPECT_LT(std::abs(jd(r, c)), 1e-12);
      }
    }
  }
}

TEST(Entangler, QubitwiseMatchesMatrixForStatesAndDensities) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 4; ++n) {
    const StateVector psi(oracle::random_state(rng, n));
    const ComplexMatrix j = build_entangler(n);
    for (bool adj : {false, true}) {
      const ComplexMatrix g = adj ? ComplexMatrix(j.adjoint()) : j;
      EXPECT_LT((apply_entangler(psi, adj).amplitudes() - g * psi.amplitudes())
                    .cwiseAbs()
                    .maxCoeff(),
                1e-13);
      const auto rho = DensityOperator::from_pure(psi);
      EXPECT_LT(max_abs_diff(apply_entangler(rho, adj).matrix(),
                             g * rho.matrix() * g.adjoint()),
                1e-13);
    }
  }
}

TEST(LocalUnitary, IdentityLeavesStateUnchanged) {
  std::mt19937_64 rng(1);
  const StateVector psi(oracle::random_state(rng, 3));
  EXPECT_EQ(apply_local_unitary(psi, identity2(), 1).amplitudes(),
            psi.amplitudes());
}

TEST(LocalUnitary, FlipOnSecondPlayer) {
  const StateVector out =
      apply_local_unitary(StateVector::basis(3, 0b000), pauli_x(), 1);
  EXPECT_EQ(out.amplitudes(), StateVector::basis(3, 0b010).amplitudes());
}

TEST(LocalUnitary, MatchesFullMatrixOracleOnRandomStates) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 4;
    const int player = trial % n;
    const StateVector psi(oracle::random_state(rng, n));
    const Mat2 u = oracle::random_unitary2(rng);
    const ComplexVector expected = oracle::embed(u, player, n) * psi.amplitudes();
    const StateVector got = apply_local_unitary(psi, u, player);
    EXPECT_LT((got.amplitudes() - expected).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(got.amplitudes().squaredNorm(), 1.0, 1e-10);
  }
}

TEST(LocalUnitary, DensityPathMatchesFullMatrixOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 4;
    const int player = trial % n;
    const auto rho = DensityOperator::from_pure(StateVector(oracle::random_state(rng, n)));
    const Mat2 u = oracle::random_unitary2(rng);
    const ComplexMatrix full = oracle::embed(u, player, n);
    EXPECT_LT(max_abs_diff(apply_local_unitary(rho, u, player).matrix(),
                           full * rho.matrix() * full.adjoint()),
              1e-12);
  }
}

TEST(LocalUnitary, RejectsNonUnitaryAndBadPlayer) {
  const StateVector psi = StateVector::basis(2);
  EXPECT_THROW(apply_local_unitary(psi, Mat2(2.0 * identity2()), 0), Error);
  EXPECT_THROW(apply_local_unitary(psi, pauli_x(), 2), Error);
  EXPECT_THROW(apply_local_unitary(psi, pauli_x(), -1), Error);
}

TEST(LocalChannel, IdentityKrausLeavesDensityUnchanged) {
  std::mt19937_64 rng(3);
  const auto rho = DensityOperator::from_pure(StateVector(oracle::random_state(rng, 3)));
  const std::vector<Mat2> id{identity2()};
  EXPECT_LT(max_abs_diff(apply_local_channel(rho, id, 2).matrix(), rho.matrix()),
            1e-15);
}

TEST(LocalChannel, DephasingFirstQubitOfPlusZeroZero) {
  ComplexVector plus = ComplexVector::Zero(8);
  plus[0b000] = plus[0b100] = 1.0 / std::sqrt(2.0);
  const auto rho = DensityOperator::from_pure(StateVector(plus));
  Mat2 p0 = Mat2::Zero(), p1 = Mat2::Zero();
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  const std::vector<Mat2> dephase{p0, p1};
  const auto out = apply_local_channel(rho, dephase, 0);
  EXPECT_NEAR(out.trace(), 1.0, 1e-15);
  EXPECT_NEAR(out.matrix()(0b000, 0b000).real(), 0.5, 1e-15);
  EXPECT_NEAR(out.matrix()(0b100, 0b100).real(), 0.5, 1e-15);
  EXPECT_EQ(out.matrix()(0b000, 0b100), Complex(0.0));
  EXPECT_EQ(out.matrix()(0b100, 0b000), Complex(0.0));
  EXPECT_NO_THROW(DensityOperator(ComplexMatrix(out.matrix())));
}

TEST(LocalChannel, MatchesBranchEnumerationOracle) {
  // rho = |psi><psi|; the channel output is the p_k-weighted mixture of the
  // normalized branches A_k|psi> / sqrt(p_k).
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 3;
    const int player = trial % n;
    const ComplexVector psi = oracle::random_state(rng, n);
    const auto kraus = oracle::random_rank2_channel(rng);
    ComplexMatrix expected = ComplexMatrix::Zero(psi.size(), psi.size());
    for (const Mat2& a : kraus) {
      const ComplexVector branch = oracle::embed(a, player, n) * psi;
      const double pk = branch.squaredNorm();
      if (pk < 1e-300) continue;
      const ComplexVector normalized = branch / std::sqrt(pk);
      expected += pk * normalized * normalized.adjoint();
    }
    const auto got = apply_local_channel(
        DensityOperator::from_pure(StateVector(psi)), kraus, player);
    EXPECT_LT(max_abs_diff(got.matrix(), expected), 1e-10);
    EXPECT_NEAR(got.trace(), 1.0, 1e-10);
  }
}

TEST(LocalChannel, RejectsIncompleteKraus) {
  const auto rho = DensityOperator::from_pure(StateVector::basis(2));
  const std::vector<Mat2> half{Mat2(0.5 * identity2())};
  EXPECT_THROW(apply_local_channel(rho, half, 0), Error);
  EXPECT_THROW(apply_local_channel(rho, std::vector<Mat2>{}, 0), Error);
  const std::vector<Mat2> id{identity2()};
  EXPECT_THROW(apply_local_channel(rho, id, 5), Error);
}

TEST(Distribution, BasisState) {
  const auto d = outcome_distribution(StateVector::basis(3, 0b010));
  EXPECT_EQ(d.at("010"), 1.0);
  EXPECT_EQ(d.total(), 1.0);
}

TEST(Distribution, TwoTermGhz) {
  const auto d = outcome_distribution(apply_entangler(StateVector::basis(2)));
  EXPECT_NEAR(d.at("00"), 0.5, 1e-15);
  EXPECT_NEAR(d.at("11"), 0.5, 1e-15);
  EXPECT_EQ(d.at("01"), 0.0);
  EXPECT_EQ(d.at("10"), 0.0);
}

TEST(Distribution, DensityClampsTinyNegativesAndRejectsLargeOnes) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1.0 + 5e-13;
  m(1, 1) = -5e-13;
  // Eigenvalue -5e-13 passes validation; the reported probability clamps.
  const DensityOperator rho(m);
  const auto d = outcome_distribution(rho);
  EXPECT_EQ(d[1], 0.0);
  EXPECT_GT(d[0], 1.0);
}

TEST(Marginal, BasisStateExcludingLast) {
  const auto d = marginal_distribution(StateVector::basis(4, 0), 3);
  EXPECT_EQ(d.n_bits, 3);
  EXPECT_EQ(d.at("000"), 1.0);
}

TEST(Marginal, KeepsRemainingPlayersInOrder) {
  // |1010>, exclude player 1 -> 1_10 = "110"
  const auto d = marginal_distribution(StateVector::basis(4, 0b1010), 1);
  EXPECT_EQ(d.at("110"), 1.0);
  EXPECT_THROW(marginal_distribution(StateVector::basis(4, 0), 4), Error);
}

TEST(Marginal, UnchangedByAnyChannelOnExcludedQubit) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 3;
    const int player = trial % n;
    const StateVector psi(oracle::random_state(rng, n));
    const auto before = marginal_distribution(psi, player);
    const auto after = marginal_distribution(
        apply_local_channel(DensityOperator::from_pure(psi),
                            oracle::random_rank2_channel(rng), player),
        player);
    for (std::size_t y = 0; y < before.probabilities.size(); ++y) {
      EXPECT_NEAR(before.probabilities[y], after.probabilities[y], 1e-9);
    }
  }
}

TEST(Validation, UnitaryAndCptpChecks) {
  EXPECT_TRUE(is_unitary(pauli_x()));
  EXPECT_FALSE(is_unitary(Mat2(2.0 * identity2())));
  EXPECT_FALSE(is_unitary(ComplexMatrix::Identity(2, 3)));
  const std::vector<Mat2> mix{std::sqrt(0.3) * identity2(),
                              std::sqrt(0.7) * pauli_z()};
  EXPECT_TRUE(is_cptp(mix));
  const std::vector<Mat2> lossy{std::sqrt(0.3) * identity2()};
  EXPECT_FALSE(is_cptp(lossy));
}

TEST(Validation, StateAndDensityInvariants) {
  EXPECT_THROW(StateVector(ComplexVector::Ones(4)), Error);
  EXPECT_THROW(StateVector(ComplexVector::Ones(3) / std::sqrt(3.0)), Error);
  ComplexMatrix not_hermitian = ComplexMatrix::Zero(2, 2);
  not_hermitian(0, 0) = 1.0;
  not_hermitian(0, 1) = 0.3;
  EXPECT_THROW(DensityOperator{not_hermitian}, Error);
  ComplexMatrix negative = ComplexMatrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  EXPECT_THROW(DensityOperator{negative}, Error);
}

TEST(Bitstrings, RoundTrip) {
  for (Outcome z = 0; z < 16; ++z) {
    EXPECT_EQ(from_bitstring(to_bitstring(z, 4)), z);
  }
  EXPECT_EQ(to_bitstring(0b0001, 4), "0001");
  EXPECT_THROW(from_bitstring("01a"), ParseError);
}

}  // namespace
}  // namespace qgames
