// Copyright 2026 The tmes Authors
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

// Named unitaries and the recursive block family built on top of the Pauli
// matrices.
//
// Block matrices [[A, B], [C, D]] are indexed by the first acted qubit: it
// selects the block row and column, so [[s0, 0], [0, s1]] is CNOT with the
// first target as control.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tmes/statevec.hpp"

namespace tmes {

enum class NamedOp {
  kSigma0,
  kSigma1,
  kSigma2,
  kSigma3,
  kCnot,
  kControlledY,
  kControlledZ,
  kChi,
  kW2,
};

/// s0 = I, s1 = X, s2 = [[0, -i], [i, 0]], s3 = Z.
Eigen::Matrix2cd sigma(int index);
/// i * s2 = [[0, 1], [-1, 0]].
Eigen::Matrix2cd i_sigma2();

LocalOperator named_operator(NamedOp name);
/// Entry `index` (1..16) of the sixteen-member two-qubit table whose first
/// member is CNOT.
LocalOperator gamma(int index);

/// CLI names: sigma0..sigma3, cnot, u_y, u_z, u_chi, u_w2, gamma:N.
LocalOperator named_operator(const std::string& name);

struct OperatorSet {
  int level = 0;  // qubits acted on
  std::vector<LocalOperator> members;
};

/// {s0, s1, s2, s3}.
OperatorSet pauli_set();
/// gamma(1) .. gamma(16) as a level-2 set.
OperatorSet gamma_set();

/// Lifts a level-d set {g_1 .. g_N}, N = 4^d, to level d+1 with 4N members
/// in four consecutive families of N, pairing g_a with g_{a+1} (cyclic):
///   diag(g_a,  g_{a+1}),  diag(g_a, -g_{a+1}),
///   [[0, g_a], [g_{a+1}, 0]],  [[0, g_a], [-g_{a+1}, 0]].
/// Throws if the base does not have exactly 4^level unitary members.
OperatorSet sigma_construct(const OperatorSet& base);

/// Level-d set: Paulis at d = 1, then repeated sigma_construct.
OperatorSet operator_level(int level);

/// Rank of the stacked, row-normalized flattened matrices; singular values
/// count when above 1e-9 times the largest. Throws on mixed arities.
std::size_t independence_rank(std::span<const LocalOperator> ops);

/// s_{i1} (x) s_{i2} (x) ... in listed order. Entries must be 0..3.
LocalOperator pauli_string(std::span<const int> indices);
/// Same with i*s2 in place of s2, so every factor is real.
LocalOperator real_pauli_string(std::span<const int> indices);

/// Base-4 digits of `code`, first digit most significant, `length` digits.
std::vector<int> pauli_digits(std::size_t code, int length);

struct RealizationReport {
  std::optional<QubitList> placement;  // first exact placement, if any
  QubitList best_placement;
  double best_overlap = 0.0;           // |<target|U source>|
  double residual() const { return 1.0 - best_overlap; }
  std::size_t placements_tried = 0;
};

/// Tries `op` on every ordered tuple of distinct qubits, lexicographically,
/// and stops at the first one reaching |<target|U_t source>| = 1 within
/// `tolerance`.
RealizationReport find_realizing_application(const LocalOperator& op,
                                             const PureState& source,
                                             const PureState& target,
                                             double tolerance = tol::kNorm);

}  // namespace tmes
