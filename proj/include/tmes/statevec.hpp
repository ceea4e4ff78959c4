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

// Dense state-vector engine.
//
// Qubits are labelled 1..n and qubit 1 is the most significant bit of the
// amplitude index, so the ket |q1 q2 ... qn> sits at index
// q1*2^(n-1) + ... + qn. Multi-qubit operators follow the same rule: the
// first entry of a target list is the most significant bit of the
// operator's own basis.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace tmes {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

/// 1-based qubit label.
using Qubit = int;
using QubitList = std::vector<Qubit>;

namespace tol {
inline constexpr double kNorm = 1e-9;
inline constexpr double kExact = 1e-12;
inline constexpr double kCluster = 1e-7;
inline constexpr double kZeroEigen = 1e-12;
}  // namespace tol

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::size_t dim_of(int num_qubits) {
  return std::size_t{1} << num_qubits;
}

class PureState {
 public:
  /// Throws unless the amplitude vector has length 2^num_qubits and unit norm
  /// within `tol::kNorm`.
  PureState(int num_qubits, CVector amplitudes);

  /// Scales `amplitudes` to unit norm first. Throws on a zero vector.
  static PureState normalized(int num_qubits, CVector amplitudes);
  static PureState basis(const std::string& bits);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return dim_of(num_qubits_); }
  const CVector& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t index) const { return amplitudes_[index]; }
  double norm() const { return amplitudes_.norm(); }

 private:
  int num_qubits_;
  CVector amplitudes_;
};

class LocalOperator {
 public:
  LocalOperator(int arity, CMatrix matrix);

  int arity() const { return arity_; }
  const CMatrix& matrix() const { return matrix_; }

  /// Largest entry of |M^dagger M - I|.
  double unitarity_defect() const;
  bool is_unitary(double tolerance = tol::kNorm) const {
    return unitarity_defect() <= tolerance;
  }

 private:
  int arity_;
  CMatrix matrix_;
};

struct DensityMatrix {
  int num_qubits = 0;
  CMatrix matrix;

  /// Hermitian, unit trace and positive semidefinite, each within `tolerance`.
  bool is_valid(double tolerance = tol::kNorm) const;
  /// Eigenvalues in descending order.
  std::vector<double> eigenvalues() const;
};

/// Eigenvalues of a reduced density matrix, descending, entries below
/// `tol::kZeroEigen` dropped.
struct SchmidtSpectrum {
  std::vector<double> eigenvalues;

  std::size_t rank() const { return eigenvalues.size(); }
  bool is_product() const { return eigenvalues.size() == 1; }
};

/// Disjoint sender/receiver split that covers qubits 1..n.
class Partition {
 public:
  Partition(QubitList sender, QubitList receiver);
  /// Receiver is the complement of `sender` in 1..num_qubits.
  static Partition from_sender(QubitList sender, int num_qubits);

  const QubitList& sender() const { return sender_; }
  const QubitList& receiver() const { return receiver_; }
  int num_qubits() const {
    return static_cast<int>(sender_.size() + receiver_.size());
  }
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  QubitList sender_;
  QubitList receiver_;
};

/// Parses "1,3,5" into a qubit list. Throws on malformed input.
QubitList parse_qubit_list(const std::string& text);
std::string format_qubit_list(std::span<const Qubit> qubits);

PureState tensor(const PureState& a, const PureState& b);

/// Applies `op` to `targets` of `state`. A norm-preserving image is returned
/// as computed; otherwise it is renormalized. Throws when the image is the
/// zero vector.
PureState apply_local(const PureState& state, const LocalOperator& op,
                      std::span<const Qubit> targets);
inline PureState apply_local(const PureState& state, const LocalOperator& op,
                             std::initializer_list<Qubit> targets) {
  return apply_local(state, op, std::span<const Qubit>(targets.begin(), targets.size()));
}

/// In-place kernel over a raw amplitude vector. No normalization.
void apply_matrix(CVector& amplitudes, int num_qubits, const CMatrix& matrix,
                  std::span<const Qubit> targets);

/// Amplitudes as a (2^|rows|) x (2^|cols|) matrix; `rows` and `cols` must
/// together list every qubit once, each in the order it should index.
CMatrix split_amplitudes(const CVector& amplitudes, int num_qubits,
                         std::span<const Qubit> rows, std::span<const Qubit> cols);

/// Reduced state on `keep` (ascending label order, whatever order `keep`
/// was given in).
DensityMatrix partial_trace(const PureState& state, std::span<const Qubit> keep);

/// Same contraction over a raw, possibly unnormalized vector. The result is
/// not rescaled.
CMatrix reduced_matrix(const CVector& amplitudes, int num_qubits,
                       std::span<const Qubit> keep);

SchmidtSpectrum schmidt_spectrum(const PureState& state, const Partition& cut);

/// Von Neumann entropy in bits.
double entropy(const SchmidtSpectrum& spectrum);

/// Sum of |negative eigenvalues| of the partial transpose over the
/// receiver side of `cut`.
double negativity(const PureState& state, const Partition& cut);

/// <a|b>.
Complex overlap(const PureState& a, const PureState& b);

/// Hermitian eigen-decomposition, eigenvalues descending. Exactly diagonal
/// inputs (within `tol::kExact`) keep the computational basis so degenerate
/// blocks come out in index order.
struct EigenSystem {
  std::vector<double> values;
  CMatrix vectors;  // column j pairs with values[j]
};
EigenSystem hermitian_eigen(const CMatrix& matrix);

/// Groups a descending list into runs that agree within `relative` of the
/// run's first entry. Returns run lengths.
std::vector<std::size_t> cluster_multiplicities(
    std::span<const double> descending, double relative = tol::kCluster);

}  // namespace tmes
