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

#include "tmes/io.hpp"

#include <fstream>
#include <sstream>

namespace tmes {

using nlohmann::json;

namespace {

json complex_pair(Complex c) { return json::array({c.real(), c.imag()}); }

Complex parse_pair(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error("expected a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

void check_header(const json& doc) {
  if (!doc.is_object()) throw Error("document must be a JSON object");
  if (doc.value("format_version", -1) != kFormatVersion) {
    throw Error("unsupported format_version");
  }
  if (doc.value("convention", std::string{}) != kConvention) {
    throw Error(std::string("unsupported convention, expected ") + kConvention);
  }
}

json matrix_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_pair(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

LocalOperator operator_body(const json& doc) {
  const int arity = doc.at("arity").get<int>();
  if (arity < 1) throw Error("operator arity must be positive");
  const json& rows = doc.at("matrix");
  const auto d = static_cast<Eigen::Index>(dim_of(arity));
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != d) {
    throw Error("operator matrix must have 2^arity rows");
  }
  CMatrix m(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    const json& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d) {
      throw Error("operator matrix must be square");
    }
    for (Eigen::Index c = 0; c < d; ++c) m(r, c) = parse_pair(row[static_cast<std::size_t>(c)]);
  }
  return LocalOperator(arity, std::move(m));
}

}  // namespace

json to_json(const PureState& state) {
  json amps = json::array();
  for (Eigen::Index i = 0; i < state.amplitudes().size(); ++i) {
    amps.push_back(complex_pair(state.amplitudes()[i]));
  }
  return json{{"format_version", kFormatVersion},
              {"num_qubits", state.num_qubits()},
              {"convention", kConvention},
              {"amplitudes", std::move(amps)}};
}

json to_json(const LocalOperator& op) {
  return json{{"format_version", kFormatVersion},
              {"convention", kConvention},
              {"arity", op.arity()},
              {"matrix", matrix_json(op.matrix())}};
}

json to_json(const OperatorSet& set) {
  json members = json::array();
  for (const auto& m : set.members) {
    members.push_back(json{{"arity", m.arity()}, {"matrix", matrix_json(m.matrix())}});
  }
  return json{{"format_version", kFormatVersion},
              {"convention", kConvention},
              {"level", set.level},
              {"members", std::move(members)}};
}

PureState state_from_json(const json& doc) {
  check_header(doc);
  try {
    const int n = doc.at("num_qubits").get<int>();
    if (n < 1) throw Error("num_qubits must be positive");
    const json& amps = doc.at("amplitudes");
    if (!amps.is_array() || amps.size() != dim_of(n)) {
      throw Error("amplitude list must have 2^num_qubits entries");
    }
    CVector v(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t i = 0; i < amps.size(); ++i) {
      v[static_cast<Eigen::Index>(i)] = parse_pair(amps[i]);
    }
    return PureState(n, std::move(v));
  } catch (const json::exception& e) {
    throw Error(std::string("malformed state document: ") + e.what());
  }
}

LocalOperator operator_from_json(const json& doc) {
  check_header(doc);
  try {
    return operator_body(doc);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed operator document: ") + e.what());
  }
}

OperatorSet operator_set_from_json(const json& doc) {
  check_header(doc);
  try {
    OperatorSet set{doc.at("level").get<int>(), {}};
    for (const json& m : doc.at("members")) set.members.push_back(operator_body(m));
    return set;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed operator set document: ") + e.what());
  }
}

std::string write_state(const PureState& state) { return to_json(state).dump(2); }

PureState read_state(const std::string& text) {
  try {
    return state_from_json(json::parse(text));
  } catch (const json::parse_error& e) {
    throw Error(std::string("not valid JSON: ") + e.what());
  }
}

void save_json(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << doc.dump(2) << '\n';
  if (!out) throw Error("write to '" + path + "' failed");
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace tmes
