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

#include <cstdio>
#include <filesystem>

#include "tmes/catalog.hpp"
#include "tmes/io.hpp"
#include "tmes/random.hpp"

namespace tmes {
namespace {

bool bit_identical(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a.data()[i].real() != b.data()[i].real() || a.data()[i].imag() != b.data()[i].imag()) {
      return false;
    }
  }
  return true;
}

TEST(Io, StateRoundTripIsBitExact) {
  Rng rng(5);
  std::vector<PureState> states = {make_state(spec::Hs{}), make_state(spec::WClass{2.0}),
                                   make_state(spec::Chi{})};
  for (int t = 0; t < 10; ++t) states.push_back(haar_state(1 + t % 6, rng));
  for (const auto& s : states) {
    const PureState back = read_state(write_state(s));
    EXPECT_EQ(back.num_qubits(), s.num_qubits());
    EXPECT_TRUE(bit_identical(back.amplitudes(), s.amplitudes()));
  }
}

TEST(Io, OperatorRoundTripIsBitExact) {
  Rng rng(6);
  const LocalOperator u = haar_unitary(2, rng);
  const LocalOperator back = operator_from_json(nlohmann::json::parse(to_json(u).dump()));
  EXPECT_TRUE(bit_identical(back.matrix(), u.matrix()));

  const OperatorSet set = operator_level(2);
  const OperatorSet again = operator_set_from_json(nlohmann::json::parse(to_json(set).dump()));
  ASSERT_EQ(again.members.size(), set.members.size());
  EXPECT_EQ(again.level, 2);
  for (std::size_t i = 0; i < set.members.size(); ++i) {
    EXPECT_TRUE(bit_identical(again.members[i].matrix(), set.members[i].matrix()));
  }
}

TEST(Io, DocumentFields) {
  const auto doc = to_json(bell());
  EXPECT_EQ(doc["format_version"], 1);
  EXPECT_EQ(doc["convention"], "q1-msb");
  EXPECT_EQ(doc["num_qubits"], 2);
  EXPECT_EQ(doc["amplitudes"].size(), 4u);
}

TEST(Io, RejectsMalformedDocuments) {
  auto doc = to_json(bell());
  doc["convention"] = "q1-lsb";
  EXPECT_THROW(state_from_json(doc), Error);
  doc = to_json(bell());
  doc["format_version"] = 2;
  EXPECT_THROW(state_from_json(doc), Error);
  doc = to_json(bell());
  doc["amplitudes"].erase(0);
  EXPECT_THROW(state_from_json(doc), Error);
  doc = to_json(bell());
  doc["amplitudes"][0] = {1.0, 0.0};
  EXPECT_THROW(state_from_json(doc), Error);  // not normalized
  doc = to_json(bell());
  doc["amplitudes"][0] = "x";
  EXPECT_THROW(state_from_json(doc), Error);
  EXPECT_THROW(read_state("{not json"), Error);
  EXPECT_THROW(state_from_json(nlohmann::json::array()), Error);
}

TEST(Io, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "tmes_io_test_state.json";
  save_json(path.string(), to_json(ghz(3)));
  const PureState back = state_from_json(load_json(path.string()));
  EXPECT_TRUE(bit_identical(back.amplitudes(), ghz(3).amplitudes()));
  std::filesystem::remove(path);
  EXPECT_THROW(load_json(path.string()), Error);
}

}  // namespace
}  // namespace tmes
