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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qgames {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr Complex kI{0.0, 1.0};

int qubits_for_dimension(Eigen::Index dim) {
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw Error("register dimension " + std::to_string(dim) +
                " is not a power of two >= 2");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if (n > kMaxQubits) {
    throw Error("register of " + std::to_string(n) + " qubits is too large");
  }
  return n;
}

void check_player(int player, int n_qubits) {
  if (player < 0 || player >= n_qubits) {
    throw Error("player index " + std::to_string(player) +
                " out of range for " + std::to_string(n_qubits) + " players");
  }
}

// Stride of the player's bit in the flattened register.
Eigen::Index stride_of(int player, int n_qubits) {
  return Eigen::Index{1} << (n_qubits - 1 - player);
}

// Left-multiplies the rows of `m` by a single-qubit operator.
template <typename Derived>
void left_apply(Eigen::MatrixBase<Derived>& m, const Mat2& op,
                Eigen::Index stride) {
  const Eigen::Index dim = m.rows();
  for (Eigen::Index base = 0; base < dim; base += 2 * stride) {
    for (Eigen::Index i = base; i < base + stride; ++i) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        const Complex a = m(i, c);
        const Complex b = m(i + stride, c);
        m(i, c) = op(0, 0) * a + op(0, 1) * b;
        m(i + stride, c) = op(1, 0) * a + op(1, 1) * b;
      }
    }
  }
}

// Right-multiplies the columns of `m` by op^dagger.
void right_apply_adjoint(ComplexMatrix& m, const Mat2& op,
                         Eigen::Index stride) {
  const Eigen::Index dim = m.cols();
  const Mat2 adj = op.adjoint();
  for (Eigen::Index base = 0; base < dim; base += 2 * stride) {
    for (Eigen::Index j = base; j < base + stride; ++j) {
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        const Complex a = m(r, j);
        const Complex b = m(r, j + stride);
        m(r, j) = a * adj(0, 0) + b * adj(1, 0);
        m(r, j + stride) = a * adj(0, 1) + b * adj(1, 1);
      }
    }
  }
}

void check_local_operator_unitary(const Mat2& u) {
  if (!is_unitary(u)) throw Error("local operator is not unitary");
}

double clamp_probability(double p) {
  if (p < 0.0) {
    if (p < -kNegativeProbabilityClamp) {
      throw Error("negative outcome probability " + std::to_string(p));
    }
    return 0.0;
  }
  return p;
}

}  // namespace

// Construction without validation, for results of operations that preserve
// the invariants by construction.
struct RegisterOps {
  static StateVector state(int n, ComplexVector amps) {
    return StateVector(n, std::move(amps), StateVector::Unchecked{});
  }
  static DensityOperator density(int n, ComplexMatrix m) {
    return DensityOperator(n, std::move(m), DensityOperator::Unchecked{});
  }
};

Mat2 identity2() { return Mat2::Identity(); }

Mat2 pauli_x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}

Mat2 pauli_y() {
  Mat2 m;
  m << 0, -kI, kI, 0;
  return m;
}

Mat2 pauli_z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}

std::string to_bitstring(Outcome outcome, int n_bits) {
  std::string s(static_cast<std::size_t>(n_bits), '0');
  for (int i = 0; i < n_bits; ++i) {
    if (player_bit(outcome, i, n_bits)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

Outcome from_bitstring(std::string_view bits) {
  if (bits.empty() || bits.size() > 63) {
    throw ParseError("invalid bitstring length", std::string(bits));
  }
  Outcome value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw ParseError("invalid bitstring", std::string(bits));
    }
    value = (value << 1) | static_cast<Outcome>(c - '0');
  }
  return value;
}

StateVector::StateVector(int n_qubits, ComplexVector amplitudes, Unchecked)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

StateVector::StateVector(ComplexVector amplitudes)
    : n_qubits_(qubits_for_dimension(amplitudes.size())),
      amplitudes_(std::move(amplitudes)) {
  if (!amplitudes_.allFinite()) throw Error("state has non-finite amplitudes");
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kStateTol) {
    throw Error("state norm^2 " + std::to_string(norm2) + " differs from 1");
  }
}

StateVector StateVector::basis(int n_qubits, Outcome index) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw Error("invalid qubit count " + std::to_string(n_qubits));
  }
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (static_cast<Eigen::Index>(index) >= dim) {
    throw Error("basis index out of range");
  }
  ComplexVector amps = ComplexVector::Zero(dim);
  amps[static_cast<Eigen::Index>(index)] = 1.0;
  return StateVector(n_qubits, std::move(amps), Unchecked{});
}

DensityOperator::DensityOperator(int n_qubits, ComplexMatrix entries,
                                 Unchecked)
    : n_qubits_(n_qubits), entries_(std::move(entries)) {}

DensityOperator::DensityOperator(ComplexMatrix entries)
    : n_qubits_(0), entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw Error("density operator must be square");
  }
  n_qubits_ = qubits_for_dimension(entries_.rows());
  if (!entries_.allFinite()) throw Error("density operator has non-finite entries");
  if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > kStateTol) {
    throw Error("density operator is not Hermitian");
  }
  if (std::abs(entries_.trace().real() - 1.0) > kStateTol) {
    throw Error("density operator trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(entries_,
                                                      Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-9) {
    throw Error("density operator has a negative eigenvalue");
  }
}

DensityOperator DensityOperator::from_pure(const StateVector& state) {
  const ComplexVector& v = state.amplitudes();
  return RegisterOps::density(state.n_qubits(), v * v.adjoint());
}

double Distribution::at(std::string_view bits) const {
  if (static_cast<int>(bits.size()) != n_bits) {
    throw Error("bitstring length does not match distribution");
  }
  return probabilities.at(from_bitstring(bits));
}

double Distribution::total() const {
  return std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix build_entangler(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw Error("entangler needs 1 <= n <= " + std::to_string(kMaxQubits));
  }
  ComplexMatrix flips = pauli_x();
  for (int i = 1; i < n; ++i) flips = tensor(flips, pauli_x());
  const Eigen::Index dim = Eigen::Index{1} << n;
  return (ComplexMatrix::Identity(dim, dim) + kI * flips) * kInvSqrt2;
}

StateVector apply_entangler(const StateVector& state, bool adjoint) {
  const ComplexVector& v = state.amplitudes();
  const Eigen::Index mask = v.size() - 1;
  const Complex phase = adjoint ? -kI : kI;
  ComplexVector out(v.size());
  for (Eigen::Index z = 0; z < v.size(); ++z) {
    out[z] = (v[z] + phase * v[z ^ mask]) * kInvSqrt2;
  }
  return RegisterOps::state(state.n_qubits(), std::move(out));
}

DensityOperator apply_entangler(const DensityOperator& rho, bool adjoint) {
  // rho -> G rho G^dagger with G v = (v + phase X^n v) / sqrt(2).
  const ComplexMatrix& m = rho.matrix();
  const Eigen::Index dim = m.rows();
  const Eigen::Index mask = dim - 1;
  const Complex phase = adjoint ? -kI : kI;
  ComplexMatrix rows(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    rows.row(r) = (m.row(r) + phase * m.row(r ^ mask)) * kInvSqrt2;
  }
  ComplexMatrix out(dim, dim);
  const Complex conj_phase = std::conj(phase);
  for (Eigen::Index c = 0; c < dim; ++c) {
    out.col(c) = (rows.col(c) + conj_phase * rows.col(c ^ mask)) * kInvSqrt2;
  }
  return RegisterOps::density(rho.n_qubits(), std::move(out));
}

StateVector apply_global_flip(const StateVector& state) {
  const ComplexVector& v = state.amplitudes();
  const Eigen::Index mask = v.size() - 1;
  ComplexVector out(v.size());
  for (Eigen::Index z = 0; z < v.size(); ++z) out[z] = v[z ^ mask];
  return RegisterOps::state(state.n_qubits(), std::move(out));
}

DensityOperator apply_global_flip(const DensityOperator& rho) {
  const ComplexMatrix& m = rho.matrix();
  const Eigen::Index dim = m.rows();
  const Eigen::Index mask = dim - 1;
  ComplexMatrix out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) out(r, c) = m(r ^ mask, c ^ mask);
  }
  return RegisterOps::density(rho.n_qubits(), std::move(out));
}

ComplexVector apply_local_operator(const ComplexVector& amplitudes,
                                   const Mat2& op, int player, int n_qubits) {
  check_player(player, n_qubits);
  ComplexVector out = amplitudes;
  left_apply(out, op, stride_of(player, n_qubits));
  return out;
}

StateVector apply_local_unitary(const StateVector& state, const Mat2& u,
                                int player) {
  check_local_operator_unitary(u);
  return RegisterOps::state(
      state.n_qubits(),
      apply_local_operator(state.amplitudes(), u, player, state.n_qubits()));
}

DensityOperator apply_local_unitary(const DensityOperator& rho, const Mat2& u,
                                    int player) {
  check_local_operator_unitary(u);
  check_player(player, rho.n_qubits());
  const Eigen::Index stride = stride_of(player, rho.n_qubits());
  ComplexMatrix m = rho.matrix();
  left_apply(m, u, stride);
  right_apply_adjoint(m, u, stride);
  return RegisterOps::density(rho.n_qubits(), std::move(m));
}

DensityOperator apply_local_channel(const DensityOperator& rho,
                                    std::span<const Mat2> kraus, int player) {
  if (kraus.empty()) throw Error("channel has no Kraus operators");
  if (!is_cptp(kraus)) {
    throw Error("Kraus operators violate sum_k A_k^dagger A_k = I");
  }
  check_player(player, rho.n_qubits());
  const Eigen::Index stride = stride_of(player, rho.n_qubits());
  ComplexMatrix acc = ComplexMatrix::Zero(rho.dim(), rho.dim());
  for (const Mat2& a : kraus) {
    ComplexMatrix m = rho.matrix();
    left_apply(m, a, stride);
    right_apply_adjoint(m, a, stride);
    acc += m;
  }
  return RegisterOps::density(rho.n_qubits(), std::move(acc));
}

void accumulate_probabilities(const ComplexVector& amplitudes,
                              std::vector<double>& probabilities) {
  for (Eigen::Index z = 0; z < amplitudes.size(); ++z) {
    probabilities[static_cast<std::size_t>(z)] += std::norm(amplitudes[z]);
  }
}

Distribution outcome_distribution(const StateVector& state) {
  Distribution d{state.n_qubits(),
                 std::vector<double>(static_cast<std::size_t>(state.dim()))};
  accumulate_probabilities(state.amplitudes(), d.probabilities);
  return d;
}

Distribution outcome_distribution(const DensityOperator& rho) {
  Distribution d{rho.n_qubits(),
                 std::vector<double>(static_cast<std::size_t>(rho.dim()))};
  for (Eigen::Index z = 0; z < rho.dim(); ++z) {
    d.probabilities[static_cast<std::size_t>(z)] =
        clamp_probability(rho.matrix()(z, z).real());
  }
  return d;
}

Distribution marginal_distribution(const Distribution& dist,
                                   int exclude_player) {
  const int n = dist.n_bits;
  check_player(exclude_player, n);
  if (n < 2) throw Error("marginal of a single-player register is empty");
  Distribution out{n - 1, std::vector<double>(std::size_t{1} << (n - 1))};
  const int low_bits = n - 1 - exclude_player;
  const Outcome low_mask = (Outcome{1} << low_bits) - 1;
  for (Outcome z = 0; z < dist.probabilities.size(); ++z) {
    const Outcome reduced = ((z >> (low_bits + 1)) << low_bits) | (z & low_mask);
    out.probabilities[reduced] += dist.probabilities[z];
  }
  return out;
}

Distribution marginal_distribution(const StateVector& state,
                                   int exclude_player) {
  return marginal_distribution(outcome_distribution(state), exclude_player);
}

Distribution marginal_distribution(const DensityOperator& rho,
                                   int exclude_player) {
  return marginal_distribution(outcome_distribution(rho), exclude_player);
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  if (!m.allFinite()) return false;
  const ComplexMatrix gram = m.adjoint() * m;
  return (gram - ComplexMatrix::Identity(m.rows(), m.cols()))
             .cwiseAbs()
             .maxCoeff() <= tol;
}

bool is_cptp(std::span<const Mat2> kraus, double tol) {
  if (kraus.empty()) return false;
  Mat2 sum = Mat2::Zero();
  for (const Mat2& a : kraus) {
    if (!a.allFinite()) return false;
    sum += a.adjoint() * a;
  }
  return (sum - Mat2::Identity()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace qgames
