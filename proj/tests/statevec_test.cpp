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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "tmes/catalog.hpp"
#include "tmes/operators.hpp"
#include "tmes/random.hpp"
#include "tmes/statevec.hpp"

namespace tmes {
namespace {

PureState from_kets(int n, double scale, std::initializer_list<const char*> kets) {
  CVector v = CVector::Zero(static_cast<Eigen::Index>(dim_of(n)));
  for (const char* k : kets) v[static_cast<Eigen::Index>(std::stoul(k, nullptr, 2))] += scale;
  return PureState(n, v);
}

void expect_same(const PureState& a, const PureState& b, double tol = tol::kExact) {
  ASSERT_EQ(a.num_qubits(), b.num_qubits());
  EXPECT_LE((a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff(), tol);
}

const PureState kPhi = bell();

TEST(PureState, RejectsUnnormalized) {
  EXPECT_THROW(PureState(1, CVector::Ones(2)), Error);
  EXPECT_THROW(PureState(2, CVector::Ones(3)), Error);
  EXPECT_NO_THROW(PureState::normalized(1, CVector::Ones(2)));
}

TEST(PureState, BasisIsMsbFirst) {
  const PureState s = PureState::basis("10");
  EXPECT_EQ(s[2], Complex(1.0));
  EXPECT_THROW(PureState::basis("1x"), Error);
  EXPECT_THROW(PureState::basis(""), Error);
}

TEST(Tensor, BellPairs) {
  expect_same(tensor(kPhi, kPhi), from_kets(4, 0.5, {"0000", "0011", "1100", "1111"}));
}

TEST(Tensor, BasisCase) {
  expect_same(tensor(PureState::basis("0"), PureState::basis("0")), PureState::basis("00"));
}

TEST(Tensor, BellBellZero) {
  expect_same(tensor(tensor(kPhi, kPhi), PureState::basis("0")),
              from_kets(5, 0.5, {"00000", "00110", "11000", "11110"}));
}

TEST(ApplyLocal, CnotOnBellPairs) {
  const PureState out = apply_local(tensor(kPhi, kPhi), named_operator(NamedOp::kCnot), {1, 3});
  expect_same(out, from_kets(4, 0.5, {"0000", "0011", "1110", "1101"}));
}

TEST(ApplyLocal, IdentityLeavesStateUnchanged) {
  const PureState s = make_state(spec::Chi{});
  const LocalOperator id(2, CMatrix::Identity(4, 4));
  expect_same(apply_local(s, id, {4, 2}), s);
}

TEST(ApplyLocal, ChainedCnots) {
  const LocalOperator cnot = named_operator(NamedOp::kCnot);
  const PureState s = tensor(tensor(kPhi, kPhi), PureState::basis("0"));
  expect_same(apply_local(apply_local(s, cnot, {1, 3}), cnot, {3, 5}),
              from_kets(5, 0.5, {"00000", "00111", "11101", "11010"}));
}

TEST(ApplyLocal, NonUnitaryImageIsRenormalized) {
  CMatrix proj = CMatrix::Zero(2, 2);
  proj(0, 0) = 1.0;
  const PureState out = apply_local(kPhi, LocalOperator(1, proj), {1});
  expect_same(out, PureState::basis("00"));
  CMatrix kill = CMatrix::Zero(2, 2);
  EXPECT_THROW(apply_local(PureState::basis("00"), LocalOperator(1, kill), {2}), Error);
}

TEST(ApplyLocal, Errors) {
  const LocalOperator cnot = named_operator(NamedOp::kCnot);
  const PureState s = tensor(kPhi, kPhi);
  EXPECT_THROW(apply_local(s, cnot, {1}), Error);
  EXPECT_THROW(apply_local(s, cnot, {1, 1}), Error);
  EXPECT_THROW(apply_local(s, cnot, {0, 2}), Error);
  EXPECT_THROW(apply_local(s, cnot, {1, 5}), Error);
}

TEST(PartialTrace, Examples) {
  const DensityMatrix r1 = partial_trace(kPhi, QubitList{1});
  EXPECT_LE((r1.matrix - 0.5 * CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff(), tol::kExact);

  CMatrix want = CMatrix::Zero(4, 4);
  want(0, 0) = want(3, 3) = 0.5;
  EXPECT_LE((partial_trace(ghz(4), QubitList{2, 4}).matrix - want).cwiseAbs().maxCoeff(),
            tol::kExact);

  const DensityMatrix om = partial_trace(make_state(spec::Omega{}), QubitList{2, 4});
  EXPECT_LE((om.matrix - 0.25 * CMatrix::Identity(4, 4)).cwiseAbs().maxCoeff(), tol::kExact);
}

TEST(PartialTrace, Errors) {
  EXPECT_THROW(partial_trace(kPhi, QubitList{}), Error);
  EXPECT_THROW(partial_trace(kPhi, QubitList{3}), Error);
  EXPECT_THROW(partial_trace(kPhi, QubitList{1, 1}), Error);
}

TEST(Schmidt, Examples) {
  EXPECT_EQ(schmidt_spectrum(PureState::basis("00"), Partition({1}, {2})).eigenvalues,
            std::vector<double>{1.0});
  const auto bell_sp = schmidt_spectrum(kPhi, Partition({1}, {2})).eigenvalues;
  ASSERT_EQ(bell_sp.size(), 2u);
  EXPECT_NEAR(bell_sp[0], 0.5, tol::kExact);
  EXPECT_NEAR(bell_sp[1], 0.5, tol::kExact);
  const auto w = schmidt_spectrum(make_state(spec::WClass{2.0}), Partition({1, 2}, {3})).eigenvalues;
  ASSERT_EQ(w.size(), 2u);
  EXPECT_NEAR(w[0], 0.5, tol::kExact);
  EXPECT_NEAR(w[1], 0.5, tol::kExact);
}

TEST(Partition, Validation) {
  EXPECT_THROW(Partition({1}, {1}), Error);
  EXPECT_THROW(Partition({}, {1, 2}), Error);
  EXPECT_THROW(Partition({1}, {3}), Error);
  EXPECT_THROW(Partition::from_sender({1, 2}, 2), Error);
  EXPECT_EQ(Partition::from_sender({3, 1}, 4).receiver(), (QubitList{2, 4}));
}

TEST(Entropy, Examples) {
  EXPECT_DOUBLE_EQ(entropy(SchmidtSpectrum{{1.0}}), 0.0);
  EXPECT_NEAR(entropy(SchmidtSpectrum{{0.5, 0.5}}), 1.0, 1e-12);
  // -(5/6)log2(5/6) - (1/6)log2(1/6)
  const double h = -(5.0 / 6.0) * std::log2(5.0 / 6.0) - (1.0 / 6.0) * std::log2(1.0 / 6.0);
  EXPECT_NEAR(entropy(SchmidtSpectrum{{5.0 / 6.0, 1.0 / 6.0}}), h, 1e-12);
  EXPECT_NEAR(h, 0.65, 1e-3);
}

TEST(Entropy, W2FirstQubit) {
  const auto sp = schmidt_spectrum(make_state(spec::WClass{2.0}), Partition({1}, {2, 3}));
  EXPECT_NEAR(entropy(sp), 0.6500, 1e-3);
}

TEST(Negativity, Examples) {
  EXPECT_NEAR(negativity(PureState::basis("00"), Partition({1}, {2})), 0.0, 1e-12);
  EXPECT_NEAR(negativity(kPhi, Partition({1}, {2})), 0.5, 1e-12);
  EXPECT_NEAR(negativity(ghz(4), Partition({1, 2}, {3, 4})), 0.5, 1e-12);
}

// Pure states: negativity = ((sum sqrt(lambda))^2 - 1) / 2.
TEST(Negativity, MatchesSchmidtFormulaOnRandomStates) {
  Rng rng(11);
  for (int t = 0; t < 10; ++t) {
    const PureState s = haar_state(4, rng);
    const Partition cut({1, 3}, {2, 4});
    double root_sum = 0.0;
    for (double l : schmidt_spectrum(s, cut).eigenvalues) root_sum += std::sqrt(l);
    EXPECT_NEAR(negativity(s, cut), (root_sum * root_sum - 1.0) / 2.0, 1e-9);
  }
}

TEST(Overlap, Examples) {
  EXPECT_NEAR(std::abs(overlap(kPhi, kPhi) - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(overlap(kPhi, bell(BellKind::kPsiPlus))), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(overlap(PureState::basis("0"), PureState::basis("1"))), 0.0, 1e-12);
  EXPECT_THROW(overlap(kPhi, PureState::basis("0")), Error);
}

TEST(Overlap, ConjugatesFirstArgument) {
  const PureState plus_i = PureState::normalized(1, (CVector(2) << 1.0, Complex(0, 1)).finished());
  EXPECT_NEAR(std::abs(overlap(plus_i, PureState::basis("1")) - Complex(0, -1 / std::sqrt(2.0))),
              0.0, 1e-12);
}

TEST(HermitianEigen, DescendingWithVectors) {
  CMatrix m(2, 2);
  m << 1.0, Complex(0, 1), Complex(0, -1), 1.0;
  const EigenSystem es = hermitian_eigen(m);
  EXPECT_NEAR(es.values[0], 2.0, 1e-12);
  EXPECT_NEAR(es.values[1], 0.0, 1e-12);
  const RVector values = Eigen::Map<const RVector>(es.values.data(), 2);
  EXPECT_LE((m * es.vectors - es.vectors * values.asDiagonal()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(ClusterMultiplicities, GroupsNearlyEqualValues) {
  const std::vector<double> a{0.5, 0.5 - 1e-10, 0.25, 0.25};
  const std::vector<double> b{0.4, 0.3, 0.3};
  EXPECT_EQ(cluster_multiplicities(a, 1e-7), (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(cluster_multiplicities(b, 1e-7), (std::vector<std::size_t>{1, 2}));
}

// Properties ---------------------------------------------------------------

TEST(Property, NormPreservedByRandomUnitaries) {
  const QubitList kOrder{5, 2, 4};
  Rng rng(1);
  for (int t = 0; t < 30; ++t) {
    const PureState s = haar_state(5, rng);
    const int arity = 1 + t % 3;
    const QubitList targets(kOrder.begin(), kOrder.begin() + arity);
    CVector amps = s.amplitudes();
    apply_matrix(amps, 5, haar_unitary(arity, rng).matrix(), targets);
    EXPECT_NEAR(amps.norm(), 1.0, 1e-9);
  }
}

TEST(Property, TargetOrderMatchesSwapConjugation) {
  Rng rng(2);
  CMatrix swap = CMatrix::Zero(4, 4);
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
  for (int t = 0; t < 20; ++t) {
    const PureState s = haar_state(4, rng);
    const LocalOperator u = haar_unitary(2, rng);
    const LocalOperator swapped(2, swap * u.matrix() * swap);
    expect_same(apply_local(s, u, {1, 3}), apply_local(s, swapped, {3, 1}));
  }
}

TEST(Property, EntropyAgreesAcrossSides) {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const PureState s = haar_state(5, rng);
    const QubitList a{1, 4};
    const QubitList b{2, 3, 5};
    const double h = entropy(schmidt_spectrum(s, Partition(a, b)));
    SchmidtSpectrum sa{partial_trace(s, a).eigenvalues()};
    SchmidtSpectrum sb{partial_trace(s, b).eigenvalues()};
    EXPECT_NEAR(h, entropy(sa), 1e-9);
    EXPECT_NEAR(h, entropy(sb), 1e-9);
  }
}

TEST(Property, FullTraceIsRankOneProjector) {
  Rng rng(4);
  for (int t = 0; t < 10; ++t) {
    const PureState s = haar_state(3, rng);
    const DensityMatrix rho = partial_trace(s, QubitList{1, 2, 3});
    EXPECT_TRUE(rho.is_valid());
    EXPECT_NEAR(rho.eigenvalues().front(), 1.0, 1e-9);
  }
}

TEST(Property, ProductAcrossFactorCut) {
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    const PureState s = tensor(haar_state(2, rng), haar_state(3, rng));
    EXPECT_TRUE(schmidt_spectrum(s, Partition({1, 2}, {3, 4, 5})).is_product());
  }
}

TEST(Property, SpectrumSumsToOne) {
  Rng rng(6);
  for (int t = 0; t < 10; ++t) {
    const auto sp = schmidt_spectrum(haar_state(6, rng), Partition({1, 2, 5}, {3, 4, 6}));
    double sum = 0.0;
    for (double l : sp.eigenvalues) {
      EXPECT_GE(l, 0.0);
      sum += l;
    }
    EXPECT_NEAR(sum, 1.0, 1e-9);
  }
}

}  // namespace
}  // namespace tmes
