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

// Named resource states.

#include <string>
#include <variant>

#include "tmes/statevec.hpp"

namespace tmes {

enum class BellKind { kPhiPlus, kPhiMinus, kPsiPlus, kPsiMinus };

namespace spec {
struct Bell {
  BellKind which = BellKind::kPhiPlus;
};
struct Ghz {
  int num_qubits = 3;
};
/// 1/2 (|0000> + |0110> + |1001> - |1111>)
struct Omega {};
struct Chi {};
/// Two-qubit-correlation maximizer with phases 1, w, w^2, w = e^{2 pi i/3}.
struct Hs {};
/// (|100> + sqrt(n)|010> + sqrt(n+1)|001>) / sqrt(2 + 2n)
struct WClass {
  double n = 1.0;
};
/// |phi+>^{(x) pairs}, pair k on qubits (2k-1, 2k).
struct BellProduct {
  int pairs = 1;
};
/// BellProduct followed by one |0> qubit.
struct OddResource {
  int pairs = 1;
};
struct Basis {
  std::string bits;
};
}  // namespace spec

using StateSpec = std::variant<spec::Bell, spec::Ghz, spec::Omega, spec::Chi, spec::Hs,
                               spec::WClass, spec::BellProduct, spec::OddResource,
                               spec::Basis>;

PureState make_state(const StateSpec& spec);

/// Text form used by the CLI: "bell:phi+", "ghz:4", "omega", "chi", "hs",
/// "w:2", "bell_product:2", "odd_resource:2", "basis:0101".
StateSpec parse_state_spec(const std::string& text);
std::string to_string(const StateSpec& spec);

inline PureState bell(BellKind which = BellKind::kPhiPlus) {
  return make_state(spec::Bell{which});
}
inline PureState ghz(int n) { return make_state(spec::Ghz{n}); }

}  // namespace tmes
