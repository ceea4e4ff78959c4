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

#include "tmes/random.hpp"

#include <cmath>

namespace tmes {

namespace {

Complex gaussian(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

}  // namespace

PureState haar_state(int num_qubits, Rng& rng) {
  CVector amps(static_cast<Eigen::Index>(dim_of(num_qubits)));
  for (Eigen::Index i = 0; i < amps.size(); ++i) amps[i] = gaussian(rng);
  return PureState::normalized(num_qubits, std::move(amps));
}

LocalOperator haar_unitary(int arity, Rng& rng) {
  const auto d = static_cast<Eigen::Index>(dim_of(arity));
  CMatrix z(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) z(i, j) = gaussian(rng);
  }
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < d; ++j) {
    const Complex diag = r(j, j);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(j) *= diag / mag;
  }
  return LocalOperator(arity, std::move(q));
}

}  // namespace tmes
