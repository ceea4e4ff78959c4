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

#include "tmes/operators.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace tmes {

namespace {

const Complex kI(0.0, 1.0);

CMatrix blocks(const CMatrix& a, const CMatrix& b, const CMatrix& c, const CMatrix& d) {
  const Eigen::Index h = a.rows();
  CMatrix out(2 * h, 2 * h);
  out << a, b, c, d;
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// One row of the printed two-qubit table: block layout, sign on the second
// block and the Pauli indices of the two blocks.
struct GammaRow {
  bool antidiagonal;
  int sign;
  int first;
  int second;
};

constexpr GammaRow kGammaTable[16] = {
    {false, +1, 0, 1}, {false, +1, 1, 2}, {false, +1, 2, 3}, {false, +1, 3, 0},
    {false, -1, 0, 1}, {false, -1, 1, 2}, {false, -1, 2, 3}, {false, -1, 3, 0},
    {true, +1, 0, 1},  {true, +1, 1, 2},  {true, +1, 2, 3},  {true, +1, 3, 0},
    {true, -1, 0, 1},  {true, -1, 1, 2},  {true, -1, 2, 3},  {true, -1, 3, 0},
};

LocalOperator string_of(std::span<const int> indices,
                        const std::function<Eigen::Matrix2cd(int)>& factor) {
  if (indices.empty()) throw Error("Pauli string must be non-empty");
  CMatrix out = CMatrix::Identity(1, 1);
  for (int i : indices) {
    if (i < 0 || i > 3) throw Error("Pauli index must be 0..3, got " + std::to_string(i));
    out = kron(out, factor(i));
  }
  return LocalOperator(static_cast<int>(indices.size()), std::move(out));
}

}  // namespace

Eigen::Matrix2cd sigma(int index) {
  Eigen::Matrix2cd m;
  switch (index) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -kI, kI, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw Error("sigma index must be 0..3, got " + std::to_string(index));
  }
  return m;
}

Eigen::Matrix2cd i_sigma2() { return kI * sigma(2); }

LocalOperator named_operator(NamedOp name) {
  const CMatrix zero = CMatrix::Zero(2, 2);
  switch (name) {
    case NamedOp::kSigma0: return LocalOperator(1, sigma(0));
    case NamedOp::kSigma1: return LocalOperator(1, sigma(1));
    case NamedOp::kSigma2: return LocalOperator(1, sigma(2));
    case NamedOp::kSigma3: return LocalOperator(1, sigma(3));
    case NamedOp::kCnot: return LocalOperator(2, blocks(sigma(0), zero, zero, sigma(1)));
    case NamedOp::kControlledY: return LocalOperator(2, blocks(sigma(0), zero, zero, sigma(2)));
    case NamedOp::kControlledZ: return LocalOperator(2, blocks(sigma(0), zero, zero, sigma(3)));
    case NamedOp::kChi:
      return LocalOperator(
          2, blocks(sigma(3), sigma(1), i_sigma2(), sigma(0)) / std::numbers::sqrt2);
    case NamedOp::kW2: {
      const double h = 1.0 / std::numbers::sqrt2;
      CMatrix m(4, 4);
      m << 0, h, h, 0,
           0, 0, 0, 1,
           1, 0, 0, 0,
           0, h, -h, 0;
      return LocalOperator(2, std::move(m));
    }
  }
  throw Error("unknown operator");
}

LocalOperator gamma(int index) {
  if (index < 1 || index > 16) {
    throw Error("gamma index must be 1..16, got " + std::to_string(index));
  }
  const GammaRow& row = kGammaTable[index - 1];
  const CMatrix zero = CMatrix::Zero(2, 2);
  const CMatrix first = sigma(row.first);
  const CMatrix second = row.sign * sigma(row.second);
  return LocalOperator(2, row.antidiagonal ? blocks(zero, first, second, zero)
                                           : blocks(first, zero, zero, second));
}

LocalOperator named_operator(const std::string& name) {
  if (name == "sigma0") return named_operator(NamedOp::kSigma0);
  if (name == "sigma1") return named_operator(NamedOp::kSigma1);
  if (name == "sigma2") return named_operator(NamedOp::kSigma2);
  if (name == "sigma3") return named_operator(NamedOp::kSigma3);
  if (name == "cnot") return named_operator(NamedOp::kCnot);
  if (name == "u_y") return named_operator(NamedOp::kControlledY);
  if (name == "u_z") return named_operator(NamedOp::kControlledZ);
  if (name == "u_chi") return named_operator(NamedOp::kChi);
  if (name == "u_w2") return named_operator(NamedOp::kW2);
  if (name.rfind("gamma:", 0) == 0) {
    const std::string arg = name.substr(6);
    std::size_t used = 0;
    int index = 0;
    try {
      index = std::stoi(arg, &used);
    } catch (const std::exception&) {
      throw Error("bad gamma index '" + arg + "'");
    }
    if (used != arg.size()) throw Error("bad gamma index '" + arg + "'");
    return gamma(index);
  }
  throw Error("unknown operator '" + name + "'");
}

OperatorSet pauli_set() {
  OperatorSet out{1, {}};
  for (int a = 0; a < 4; ++a) out.members.emplace_back(1, sigma(a));
  return out;
}

OperatorSet gamma_set() {
  OperatorSet out{2, {}};
  for (int a = 1; a <= 16; ++a) out.members.push_back(gamma(a));
  return out;
}

OperatorSet sigma_construct(const OperatorSet& base) {
  if (base.level < 1) throw Error("operator set level must be >= 1");
  const std::size_t n = std::size_t{1} << (2 * base.level);
  if (base.members.size() != n) {
    throw Error("level-" + std::to_string(base.level) + " set needs " + std::to_string(n) +
                " members, got " + std::to_string(base.members.size()));
  }
  for (std::size_t a = 0; a < n; ++a) {
    const auto& m = base.members[a];
    if (m.arity() != base.level) throw Error("member arity does not match set level");
    if (!m.is_unitary()) throw Error("member " + std::to_string(a + 1) + " is not unitary");
  }

  const auto h = static_cast<Eigen::Index>(dim_of(base.level));
  const CMatrix zero = CMatrix::Zero(h, h);
  OperatorSet out{base.level + 1, {}};
  out.members.reserve(4 * n);
  for (int family = 0; family < 4; ++family) {
    const bool antidiagonal = family >= 2;
    const double sign = family % 2 == 0 ? 1.0 : -1.0;
    for (std::size_t a = 0; a < n; ++a) {
      const CMatrix& first = base.members[a].matrix();
      const CMatrix second = sign * base.members[(a + 1) % n].matrix();
      out.members.emplace_back(out.level, antidiagonal ? blocks(zero, first, second, zero)
                                                       : blocks(first, zero, zero, second));
    }
  }
  return out;
}

OperatorSet operator_level(int level) {
  if (level < 1) throw Error("operator level must be >= 1");
  OperatorSet out = pauli_set();
  while (out.level < level) out = sigma_construct(out);
  return out;
}

std::size_t independence_rank(std::span<const LocalOperator> ops) {
  if (ops.empty()) return 0;
  const int arity = ops.front().arity();
  const Eigen::Index d = ops.front().matrix().rows();
  CMatrix rows(static_cast<Eigen::Index>(ops.size()), d * d);
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].arity() != arity) throw Error("independence_rank needs equal arities");
    const CMatrix& m = ops[i].matrix();
    const double norm = m.norm();
    if (norm == 0.0) {
      rows.row(static_cast<Eigen::Index>(i)).setZero();
      continue;
    }
    for (Eigen::Index r = 0; r < d; ++r) {
      rows.block(static_cast<Eigen::Index>(i), r * d, 1, d) = m.row(r) / norm;
    }
  }
  Eigen::BDCSVD<CMatrix> svd(rows);
  const RVector& s = svd.singularValues();
  if (s.size() == 0 || s[0] == 0.0) return 0;
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] > 1e-9 * s[0]) ++rank;
  }
  return rank;
}

LocalOperator pauli_string(std::span<const int> indices) {
  return string_of(indices, [](int i) { return sigma(i); });
}

LocalOperator real_pauli_string(std::span<const int> indices) {
  return string_of(indices, [](int i) { return i == 2 ? i_sigma2() : sigma(i); });
}

std::vector<int> pauli_digits(std::size_t code, int length) {
  std::vector<int> out(static_cast<std::size_t>(length));
  for (int i = length - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(code & 3U);
    code >>= 2;
  }
  return out;
}

RealizationReport find_realizing_application(const LocalOperator& op,
                                             const PureState& source,
                                             const PureState& target,
                                             double tolerance) {
  if (source.num_qubits() != target.num_qubits()) {
    throw Error("source and target have different qubit counts");
  }
  const int n = source.num_qubits();
  const int k = op.arity();
  if (k > n) throw Error("operator acts on more qubits than the state has");

  RealizationReport report;
  QubitList tuple(static_cast<std::size_t>(k));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);

  // Depth-first over ordered tuples gives lexicographic order.
  std::function<bool(int)> visit = [&](int depth) -> bool {
    if (depth == k) {
      ++report.placements_tried;
      CVector amps = source.amplitudes();
      apply_matrix(amps, n, op.matrix(), tuple);
      const double ov = std::abs(target.amplitudes().dot(amps));
      if (ov > report.best_overlap + tol::kExact || report.best_placement.empty()) {
        report.best_overlap = ov;
        report.best_placement = tuple;
      }
      if (std::abs(ov - 1.0) <= tolerance) {
        report.placement = tuple;
        return true;
      }
      return false;
    }
    for (Qubit q = 1; q <= n; ++q) {
      if (used[static_cast<std::size_t>(q)]) continue;
      used[static_cast<std::size_t>(q)] = true;
      tuple[static_cast<std::size_t>(depth)] = q;
      const bool done = visit(depth + 1);
      used[static_cast<std::size_t>(q)] = false;
      if (done) return true;
    }
    return false;
  };
  visit(0);
  return report;
}

}  // namespace tmes
