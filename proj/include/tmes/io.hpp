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

// JSON documents for states and operators.
//
//   state:    {"format_version": 1, "num_qubits": n, "convention": "q1-msb",
//              "amplitudes": [[re, im], ...]}
//   operator: {"format_version": 1, "convention": "q1-msb", "arity": k,
//              "matrix": [[[re, im], ...], ...]}      (row major)
//   operator set: {"format_version": 1, "convention": "q1-msb", "level": d,
//              "members": [{"arity": d, "matrix": ...}, ...]}
//
// Doubles are written in shortest round-trip form, so a write/read cycle
// reproduces every amplitude bit for bit.

#include <string>

#include <json.hpp>

#include "tmes/operators.hpp"
#include "tmes/statevec.hpp"

namespace tmes {

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kConvention = "q1-msb";

nlohmann::json to_json(const PureState& state);
nlohmann::json to_json(const LocalOperator& op);
nlohmann::json to_json(const OperatorSet& set);

PureState state_from_json(const nlohmann::json& doc);
LocalOperator operator_from_json(const nlohmann::json& doc);
OperatorSet operator_set_from_json(const nlohmann::json& doc);

std::string write_state(const PureState& state);
PureState read_state(const std::string& text);

void save_json(const std::string& path, const nlohmann::json& doc);
nlohmann::json load_json(const std::string& path);

}  // namespace tmes
