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

#include <cstdint>
#include <random>

#include "tmes/statevec.hpp"

namespace tmes {

using Rng = std::mt19937_64;

/// Normalized vector of independent standard complex Gaussians.
PureState haar_state(int num_qubits, Rng& rng);

/// QR of a complex Gaussian matrix with the R-diagonal phases divided out.
LocalOperator haar_unitary(int arity, Rng& rng);

}  // namespace tmes
