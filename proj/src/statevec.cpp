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

#include "tmes/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace tmes {

namespace {

constexpr int kMaxQubits = 24;

void check_qubit_count(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw Error("qubit count out of range: " + std::to_string(num_qubits));
  }
}

// Bit position of 1-based qubit `q` in an n-qubit index.
int bit_of(Qubit q, int num_qubits) { return num_qubits - q; }

void check_targets(std::span<const Qubit> targets, int num_qubits) {
  std::vector<bool> seen(static_cast<std::size_t>(num_qubits) + 1, false);
  for (Qubit q : targets) {
    if (q < 1 || q > num_qubits) {
      throw Error("qubit " + std::to_string(q) + " out of range 1.." +
                  std::to_string(num_qubits));
    }
    if (seen[static_cast<std::size_t>(q)]) {
      throw Error("duplicate qubit " + std::to_string(q));
    }
    seen[static_cast<std::size_t>(q)] = true;
  }
}

QubitList sorted_copy(std::span<const Qubit> qubits) {
  QubitList out(qubits.begin(), qubits.end());
  std::sort(out.begin(), out.end());
  return out;
}

QubitList complement(std::span<const Qubit> qubits, int num_qubits) {
  QubitList out;
  for (Qubit q = 1; q <= num_qubits; ++q) {
    if (std::find(qubits.begin(), qubits.end(), q) == qubits.end()) {
      out.push_back(q);
    }
  }
  return out;
}

// Gathers the bits of `index` at the given qubits, first qubit most
// significant.
std::size_t gather_bits(std::size_t index, std::span<const Qubit> qubits,
                        int num_qubits) {
  std::size_t out = 0;
  for (Qubit q : qubits) {
    out = (out << 1) | ((index >> bit_of(q, num_qubits)) & 1U);
  }
  return out;
}

}  // namespace

CMatrix split_amplitudes(const CVector& amplitudes, int num_qubits,
                         std::span<const Qubit> rows, std::span<const Qubit> cols) {
  if (rows.size() + cols.size() != static_cast<std::size_t>(num_qubits)) {
    throw Error("split must cover every qubit");
  }
  QubitList all(rows.begin(), rows.end());
  all.insert(all.end(), cols.begin(), cols.end());
  check_targets(all, num_qubits);
  CMatrix out(dim_of(static_cast<int>(rows.size())),
              dim_of(static_cast<int>(cols.size())));
  for (std::size_t i = 0; i < dim_of(num_qubits); ++i) {
    out(static_cast<Eigen::Index>(gather_bits(i, rows, num_qubits)),
        static_cast<Eigen::Index>(gather_bits(i, cols, num_qubits))) =
        amplitudes[static_cast<Eigen::Index>(i)];
  }
  return out;
}

PureState::PureState(int num_qubits, CVector amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubit_count(num_qubits_);
  if (static_cast<std::size_t>(amplitudes_.size()) != dim_of(num_qubits_)) {
    throw Error("amplitude count does not match 2^num_qubits");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > tol::kNorm) {
    throw Error("state is not normalized");
  }
}

PureState PureState::normalized(int num_qubits, CVector amplitudes) {
  const double n = amplitudes.norm();
  if (n <= tol::kExact) throw Error("cannot normalize the zero vector");
  amplitudes /= n;
  return PureState(num_qubits, std::move(amplitudes));
}

PureState PureState::basis(const std::string& bits) {
  if (bits.empty()) throw Error("empty basis string");
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw Error("basis string must be binary: " + bits);
    index = (index << 1) | static_cast<std::size_t>(c - '0');
  }
  const int n = static_cast<int>(bits.size());
  check_qubit_count(n);
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(dim_of(n)));
  amps[static_cast<Eigen::Index>(index)] = 1.0;
  return PureState(n, std::move(amps));
}

LocalOperator::LocalOperator(int arity, CMatrix matrix)
    : arity_(arity), matrix_(std::move(matrix)) {
  check_qubit_count(arity_);
  const auto d = static_cast<Eigen::Index>(dim_of(arity_));
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw Error("operator matrix must be 2^arity square");
  }
}

double LocalOperator::unitarity_defect() const {
  const CMatrix defect =
      matrix_.adjoint() * matrix_ - CMatrix::Identity(matrix_.rows(), matrix_.cols());
  return defect.cwiseAbs().maxCoeff();
}

bool DensityMatrix::is_valid(double tolerance) const {
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > tolerance) return false;
  if (std::abs(matrix.trace() - Complex(1.0)) > tolerance) return false;
  const auto values = eigenvalues();
  return values.empty() || values.back() >= -tolerance;
}

std::vector<double> DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(matrix, Eigen::EigenvaluesOnly);
  const RVector& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Partition::Partition(QubitList sender, QubitList receiver)
    : sender_(std::move(sender)), receiver_(std::move(receiver)) {
  if (sender_.empty() || receiver_.empty()) {
    throw Error("partition sides must be non-empty");
  }
  std::sort(sender_.begin(), sender_.end());
  std::sort(receiver_.begin(), receiver_.end());
  QubitList all = sender_;
  all.insert(all.end(), receiver_.begin(), receiver_.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != static_cast<Qubit>(i) + 1) {
      throw Error("partition must split qubits 1.." + std::to_string(all.size()) +
                  " into disjoint sides");
    }
  }
}

Partition Partition::from_sender(QubitList sender, int num_qubits) {
  check_targets(sender, num_qubits);
  QubitList receiver = complement(sender, num_qubits);
  return Partition(std::move(sender), std::move(receiver));
}

std::string Partition::str() const {
  return "{" + format_qubit_list(sender_) + "}|{" + format_qubit_list(receiver_) + "}";
}

QubitList parse_qubit_list(const std::string& text) {
  QubitList out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw Error("bad qubit list: '" + text + "'");
    }
    if (used != item.size()) throw Error("bad qubit list: '" + text + "'");
    out.push_back(value);
  }
  if (out.empty()) throw Error("empty qubit list");
  return out;
}

std::string format_qubit_list(std::span<const Qubit> qubits) {
  std::string out;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(qubits[i]);
  }
  return out;
}

PureState tensor(const PureState& a, const PureState& b) {
  const auto db = static_cast<Eigen::Index>(b.dim());
  CVector out(static_cast<Eigen::Index>(a.dim()) * db);
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(a.dim()); ++i) {
    out.segment(i * db, db) = a.amplitudes()[i] * b.amplitudes();
  }
  return PureState::normalized(a.num_qubits() + b.num_qubits(), std::move(out));
}

void apply_matrix(CVector& amplitudes, int num_qubits, const CMatrix& matrix,
                  std::span<const Qubit> targets) {
  check_targets(targets, num_qubits);
  const int k = static_cast<int>(targets.size());
  const std::size_t block = dim_of(k);
  if (static_cast<std::size_t>(matrix.rows()) != block ||
      static_cast<std::size_t>(matrix.cols()) != block) {
    throw Error("operator arity " + std::to_string(matrix.rows()) +
                "x" + std::to_string(matrix.cols()) + " does not match " +
                std::to_string(k) + " targets");
  }

  std::vector<std::size_t> offsets(block, 0);
  std::size_t mask = 0;
  for (std::size_t j = 0; j < block; ++j) {
    for (int m = 0; m < k; ++m) {
      if ((j >> (k - 1 - m)) & 1U) {
        offsets[j] |= std::size_t{1} << bit_of(targets[static_cast<std::size_t>(m)], num_qubits);
      }
    }
  }
  for (Qubit q : targets) mask |= std::size_t{1} << bit_of(q, num_qubits);

  CVector in(static_cast<Eigen::Index>(block));
  for (std::size_t base = 0; base < dim_of(num_qubits); ++base) {
    if (base & mask) continue;
    for (std::size_t j = 0; j < block; ++j) {
      in[static_cast<Eigen::Index>(j)] = amplitudes[static_cast<Eigen::Index>(base | offsets[j])];
    }
    const CVector out = matrix * in;
    for (std::size_t j = 0; j < block; ++j) {
      amplitudes[static_cast<Eigen::Index>(base | offsets[j])] = out[static_cast<Eigen::Index>(j)];
    }
  }
}

PureState apply_local(const PureState& state, const LocalOperator& op,
                      std::span<const Qubit> targets) {
  if (static_cast<int>(targets.size()) != op.arity()) {
    throw Error("operator arity " + std::to_string(op.arity()) + " but " +
                std::to_string(targets.size()) + " targets");
  }
  CVector amps = state.amplitudes();
  apply_matrix(amps, state.num_qubits(), op.matrix(), targets);
  if (std::abs(amps.norm() - 1.0) <= tol::kNorm) return PureState(state.num_qubits(), std::move(amps));
  return PureState::normalized(state.num_qubits(), std::move(amps));
}

CMatrix reduced_matrix(const CVector& amplitudes, int num_qubits,
                       std::span<const Qubit> keep) {
  if (keep.empty()) throw Error("partial trace needs at least one kept qubit");
  check_targets(keep, num_qubits);
  const QubitList kept = sorted_copy(keep);
  const QubitList traced = complement(kept, num_qubits);
  const CMatrix a = split_amplitudes(amplitudes, num_qubits, kept, traced);
  return a * a.adjoint();
}

DensityMatrix partial_trace(const PureState& state, std::span<const Qubit> keep) {
  return DensityMatrix{static_cast<int>(keep.size()),
                       reduced_matrix(state.amplitudes(), state.num_qubits(), keep)};
}

SchmidtSpectrum schmidt_spectrum(const PureState& state, const Partition& cut) {
  if (cut.num_qubits() != state.num_qubits()) {
    throw Error("partition " + cut.str() + " does not match a " +
                std::to_string(state.num_qubits()) + "-qubit state");
  }
  const QubitList& side =
      cut.sender().size() <= cut.receiver().size() ? cut.sender() : cut.receiver();
  const auto values = partial_trace(state, side).eigenvalues();
  SchmidtSpectrum out;
  for (double v : values) {
    if (v >= tol::kZeroEigen) out.eigenvalues.push_back(v);
  }
  return out;
}

double entropy(const SchmidtSpectrum& spectrum) {
  double h = 0.0;
  for (double p : spectrum.eigenvalues) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

double negativity(const PureState& state, const Partition& cut) {
  if (cut.num_qubits() != state.num_qubits()) {
    throw Error("partition " + cut.str() + " does not match the state");
  }
  const CMatrix psi =
      split_amplitudes(state.amplitudes(), state.num_qubits(), cut.sender(), cut.receiver());
  const Eigen::Index da = psi.rows();
  const Eigen::Index db = psi.cols();
  // rho^{T_B}[(a,b),(a',b')] = psi(a,b') conj(psi(a',b))
  CMatrix pt(da * db, da * db);
  for (Eigen::Index a = 0; a < da; ++a) {
    for (Eigen::Index b = 0; b < db; ++b) {
      for (Eigen::Index a2 = 0; a2 < da; ++a2) {
        for (Eigen::Index b2 = 0; b2 < db; ++b2) {
          pt(a * db + b, a2 * db + b2) = psi(a, b2) * std::conj(psi(a2, b));
        }
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(pt, Eigen::EigenvaluesOnly);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double v = solver.eigenvalues()[i];
    if (v < 0.0) sum -= v;
  }
  // Roundoff on the zero eigenvalues.
  return sum < tol::kExact ? 0.0 : sum;
}

Complex overlap(const PureState& a, const PureState& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw Error("overlap of states with different qubit counts");
  }
  return a.amplitudes().dot(b.amplitudes());
}

EigenSystem hermitian_eigen(const CMatrix& matrix) {
  const Eigen::Index d = matrix.rows();
  EigenSystem out;
  const CMatrix off = matrix - CMatrix(matrix.diagonal().asDiagonal());
  if (d == 0 || off.cwiseAbs().maxCoeff() <= tol::kExact) {
    std::vector<Eigen::Index> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
      return matrix(x, x).real() > matrix(y, y).real();
    });
    out.vectors = CMatrix::Zero(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
      const Eigen::Index src = order[static_cast<std::size_t>(j)];
      out.values.push_back(matrix(src, src).real());
      out.vectors(src, j) = 1.0;
    }
    return out;
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(matrix);
  out.vectors = solver.eigenvectors().rowwise().reverse();
  for (Eigen::Index j = d - 1; j >= 0; --j) out.values.push_back(solver.eigenvalues()[j]);
  return out;
}

std::vector<std::size_t> cluster_multiplicities(std::span<const double> descending,
                                                double relative) {
  std::vector<std::size_t> runs;
  std::size_t i = 0;
  while (i < descending.size()) {
    const double ref = descending[i];
    std::size_t j = i + 1;
    while (j < descending.size() &&
           std::abs(descending[j] - ref) <= relative * std::abs(ref)) {
      ++j;
    }
    runs.push_back(j - i);
    i = j;
  }
  return runs;
}

}  // namespace tmes
