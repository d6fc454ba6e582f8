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

// Dense N-qubit register mechanics.
//
// Basis convention, shared by every module: qubit i belongs to player i
// (0-based in the C++ API), and an outcome is an integer whose most
// significant of n bits is player 0. Written as a bitstring the players
// read left to right. Bit value 0 is the "don't flip" outcome, 1 is "flip".

#ifndef QGAMES_QCORE_HPP_
#define QGAMES_QCORE_HPP_

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qgames/error.hpp"

namespace qgames {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Mat2 = Eigen::Matrix2cd;
using Outcome = std::uint64_t;

// Validation tolerance for unitarity and Kraus completeness.
inline constexpr double kStructuralTol = 1e-8;
// Norm, trace and hermiticity tolerance for states.
inline constexpr double kStateTol = 1e-10;
// Probabilities this far below zero are rounding noise and are clamped.
inline constexpr double kNegativeProbabilityClamp = 1e-12;

inline constexpr int kMaxQubits = 20;

Mat2 identity2();
Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();

std::string to_bitstring(Outcome outcome, int n_bits);
// Throws ParseError on characters other than 0/1 or on an empty string.
Outcome from_bitstring(std::string_view bits);
// Bit of `player` in `outcome` for an n-player register.
inline int player_bit(Outcome outcome, int player, int n_players) {
  return static_cast<int>((outcome >> (n_players - 1 - player)) & 1u);
}

class StateVector {
 public:
  // |index> on n qubits.
  static StateVector basis(int n_qubits, Outcome index = 0);

  // Throws unless the length is a power of two and the norm is 1 within
  // kStateTol.
  explicit StateVector(ComplexVector amplitudes);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  Complex operator[](Outcome index) const {
    return amplitudes_[static_cast<Eigen::Index>(index)];
  }

 private:
  struct Unchecked {};
  StateVector(int n_qubits, ComplexVector amplitudes, Unchecked);

  int n_qubits_;
  ComplexVector amplitudes_;

  friend struct RegisterOps;
};

class DensityOperator {
 public:
  static DensityOperator from_pure(const StateVector& state);

  // Validates hermiticity, unit trace and positivity (eigenvalues >= -1e-9).
  explicit DensityOperator(ComplexMatrix entries);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return entries_.rows(); }
  const ComplexMatrix& matrix() const { return entries_; }
  double trace() const { return entries_.trace().real(); }

 private:
  struct Unchecked {};
  DensityOperator(int n_qubits, ComplexMatrix entries, Unchecked);

  int n_qubits_;
  ComplexMatrix entries_;

  friend struct RegisterOps;
};

// Probabilities over 2^n outcomes, indexed by Outcome.
struct Distribution {
  int n_bits = 0;
  std::vector<double> probabilities;

  double operator[](Outcome outcome) const { return probabilities[outcome]; }
  double at(std::string_view bits) const;
  double total() const;
};

// Kronecker product a ⊗ b.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// The entangler (I^{⊗n} + i F^{⊗n}) / sqrt(2) with F = sigma_x.
ComplexMatrix build_entangler(int n);

// Applies the entangler (or its adjoint) without materializing the matrix.
StateVector apply_entangler(const StateVector& state, bool adjoint = false);
DensityOperator apply_entangler(const DensityOperator& rho,
                                bool adjoint = false);

// Applies sigma_x to every qubit.
StateVector apply_global_flip(const StateVector& state);
DensityOperator apply_global_flip(const DensityOperator& rho);

StateVector apply_local_unitary(const StateVector& state, const Mat2& u,
                                int player);
DensityOperator apply_local_unitary(const DensityOperator& rho, const Mat2& u,
                                    int player);

// rho -> sum_k A_k rho A_k^dagger on one player's qubit.
DensityOperator apply_local_channel(const DensityOperator& rho,
                                    std::span<const Mat2> kraus, int player);

// Unnormalized A|psi> for a single Kraus element; no unitarity check.
ComplexVector apply_local_operator(const ComplexVector& amplitudes,
                                   const Mat2& op, int player, int n_qubits);

Distribution outcome_distribution(const StateVector& state);
Distribution outcome_distribution(const DensityOperator& rho);

// Born-rule probabilities of an unnormalized amplitude vector, accumulated
// into `probabilities`.
void accumulate_probabilities(const ComplexVector& amplitudes,
                              std::vector<double>& probabilities);

// Marginal over every player except `exclude_player`, remaining players kept
// in order.
Distribution marginal_distribution(const Distribution& dist,
                                   int exclude_player);
Distribution marginal_distribution(const StateVector& state,
                                   int exclude_player);
Distribution marginal_distribution(const DensityOperator& rho,
                                   int exclude_player);

bool is_unitary(const ComplexMatrix& m, double tol = kStructuralTol);
bool is_cptp(std::span<const Mat2> kraus, double tol = kStructuralTol);

}  // namespace qgames

#endif  // QGAMES_QCORE_HPP_
