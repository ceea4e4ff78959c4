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

#include "tmes/capacity.hpp"
#include "tmes/catalog.hpp"
#include "tmes/operators.hpp"
#include "tmes/random.hpp"

namespace tmes {
namespace {

const LocalOperator kCnot = named_operator(NamedOp::kCnot);

PureState cluster() { return apply_local(make_state(spec::BellProduct{2}), kCnot, {1, 3}); }

PureState five_qubit() {
  return apply_local(apply_local(make_state(spec::OddResource{2}), kCnot, {1, 3}), kCnot, {3, 5});
}

const Partition kOddEven({1, 3}, {2, 4});

// Largest set of mutually orthogonal Pauli encodings, by checking every
// subset of the 4^|sender| encodings.
std::size_t brute_force_sdc(const PureState& s, const QubitList& sender) {
  const int k = static_cast<int>(sender.size());
  const std::size_t count = std::size_t{1} << (2 * k);
  std::vector<PureState> enc;
  for (std::size_t c = 0; c < count; ++c) {
    enc.push_back(apply_local(s, real_pauli_string(pauli_digits(c, k)), sender));
  }
  std::vector<std::uint32_t> ortho(count, 0);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      if (a != b && std::abs(overlap(enc[a], enc[b])) <= 1e-9) ortho[a] |= 1u << b;
    }
  }
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << count); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t a = 0; ok && a < count; ++a) {
      if ((mask >> a) & 1u) ok = (mask & ~(1u << a) & ~ortho[a]) == 0;
    }
    if (ok) best = size;
  }
  return best;
}

TEST(TeleportCapacity, Examples) {
  EXPECT_EQ(teleport_capacity(ghz(4), kOddEven), 1);
  EXPECT_EQ(teleport_capacity(cluster(), kOddEven), 2);
  EXPECT_EQ(teleport_capacity(make_state(spec::BellProduct{2}), kOddEven), 2);
  EXPECT_EQ(teleport_capacity(make_state(spec::WClass{2.0}), Partition({1, 2}, {3})), 1);
}

TEST(TeleportCapacity, ProductAndInvalidCut) {
  EXPECT_EQ(teleport_capacity(PureState::basis("00"), Partition({1}, {2})), 0);
  EXPECT_THROW(teleport_capacity(ghz(4), Partition({1}, {2})), Error);
}

TEST(TeleportProtocol, BellIsStandardProtocol) {
  const TeleportProtocol p = build_teleport_protocol(bell(), Partition({1}, {2}), 1);
  ASSERT_EQ(p.num_outcomes(), 4u);
  EXPECT_LE(p.orthonormality_defect(), 1e-9);
  const std::vector<CMatrix> want = {CMatrix(sigma(0)), CMatrix(sigma(1)), CMatrix(i_sigma2()),
                                     CMatrix(sigma(3))};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_LE((p.corrections[i].matrix() - want[i]).cwiseAbs().maxCoeff(), 1e-12) << i;
  }
}

TEST(TeleportProtocol, ClusterHasSixteenOrthonormalOutcomes) {
  const TeleportProtocol p = build_teleport_protocol(cluster(), kOddEven, 2);
  EXPECT_EQ(p.num_outcomes(), 16u);
  EXPECT_LE(p.orthonormality_defect(), 1e-9);
  for (const auto& c : p.corrections) EXPECT_TRUE(c.is_unitary(1e-9));
  EXPECT_TRUE(p.receiver_frame.is_unitary(1e-9));
}

TEST(TeleportProtocol, InsufficientCapacity) {
  EXPECT_THROW(build_teleport_protocol(ghz(4), kOddEven, 2), Error);
  EXPECT_THROW(build_teleport_protocol(cluster(), kOddEven, 0), Error);
}

void expect_perfect(const PureState& resource, const Partition& cut, int payload_qubits,
                    std::uint64_t seed) {
  Rng rng(seed);
  const TeleportProtocol p = build_teleport_protocol(resource, cut, payload_qubits);
  for (int t = 0; t < 20; ++t) {
    const TeleportRun run = simulate_teleportation(resource, p, haar_state(payload_qubits, rng));
    EXPECT_NEAR(run.total_probability, 1.0, 1e-9);
    EXPECT_GE(run.min_fidelity, 1.0 - 1e-9);
    for (const auto& o : run.outcomes) {
      EXPECT_NEAR(o.probability, std::ldexp(1.0, -2 * payload_qubits), 1e-9);
    }
  }
}

TEST(SimulateTeleportation, Examples) {
  expect_perfect(cluster(), kOddEven, 2, 1);
  expect_perfect(bell(), Partition({1}, {2}), 1, 2);
  expect_perfect(five_qubit(), Partition({1, 3, 5}, {2, 4}), 2, 3);
}

TEST(SimulateTeleportation, PayloadMismatch) {
  const TeleportProtocol p = build_teleport_protocol(cluster(), kOddEven, 2);
  EXPECT_THROW(simulate_teleportation(cluster(), p, PureState::basis("0")), Error);
}

TEST(Sdc, Examples) {
  EXPECT_EQ(sdc_max_messages(ghz(4), {1, 3}), 8u);
  EXPECT_EQ(sdc_max_messages(cluster(), {1, 3}), 16u);
  EXPECT_EQ(sdc_max_messages(make_state(spec::WClass{2.0}), {1, 2}), 8u);
  EXPECT_EQ(sdc_max_messages(PureState::basis("0000"), {1, 3}), 4u);
}

TEST(Sdc, InvalidSender) {
  EXPECT_THROW(sdc_max_messages(ghz(4), {}), Error);
  EXPECT_THROW(sdc_max_messages(ghz(4), {1, 2, 3, 4}), Error);
  EXPECT_THROW(sdc_max_messages(ghz(4), {5}), Error);
}

TEST(Sdc, CliqueMatchesBruteForce) {
  Rng rng(9);
  const std::vector<std::pair<PureState, QubitList>> cases = {
      {PureState::basis("0000"), {1, 3}},
      {ghz(4), {1, 3}},
      {cluster(), {1, 3}},
      {make_state(spec::WClass{2.0}), {1, 2}},
      {make_state(spec::WClass{2.0}), {1, 3}},
      {make_state(spec::WClass{2.0}), {2, 3}},
      {make_state(spec::Hs{}), {1, 2}},
      {make_state(spec::Omega{}), {2, 4}},
      {ghz(3), {2}},
      {haar_state(3, rng), {1, 2}},
  };
  for (const auto& [s, sender] : cases) {
    SdcOptions exhaustive;
    exhaustive.fast_path = false;
    EXPECT_EQ(sdc_max_messages(s, sender, exhaustive), brute_force_sdc(s, sender))
        << format_qubit_list(sender);
  }
}

TEST(SimulateSdc, DecodesEveryMessage) {
  for (const auto& [s, sender, m] :
       std::vector<std::tuple<PureState, QubitList, std::size_t>>{
           {bell(), {1}, 4}, {cluster(), {1, 3}, 16}, {five_qubit(), {1, 3, 5}, 32}}) {
    const SdcCodebook book = build_sdc_codebook(s, sender, m);
    ASSERT_EQ(book.size(), m);
    EXPECT_LE(book.max_overlap(), 1e-9);
    for (std::size_t i = 0; i < m; ++i) {
      const SdcDecode d = simulate_sdc(s, book, i);
      EXPECT_EQ(d.decoded, i);
      EXPECT_NEAR(d.probability, 1.0, 1e-9);
    }
    EXPECT_THROW(simulate_sdc(s, book, m), Error);
  }
}

TEST(SimulateSdc, Ghz4CannotCarrySixteen) {
  EXPECT_THROW(build_sdc_codebook(ghz(4), {1, 3}, 16), Error);
  EXPECT_EQ(build_sdc_codebook(ghz(4), {1, 3}).size(), 8u);
}

TEST(IsTmes, Examples) {
  EXPECT_TRUE(is_tmes(make_state(spec::Chi{})).is_tmes);
  EXPECT_TRUE(is_tmes(make_state(spec::Omega{})).is_tmes);
  EXPECT_FALSE(is_tmes(make_state(spec::Hs{})).is_tmes);
  EXPECT_FALSE(is_tmes(ghz(5)).is_tmes);
  EXPECT_FALSE(is_tmes(ghz(4)).is_tmes);
  const TmesVerdict v = is_tmes(five_qubit());
  EXPECT_TRUE(v.is_tmes);
  EXPECT_EQ(v.teleport_threshold, 2);
  EXPECT_EQ(v.sdc_threshold, 32u);
  ASSERT_TRUE(v.witnessing_partition.has_value());
  EXPECT_EQ(teleport_capacity(five_qubit(), *v.witnessing_partition), 2);
  EXPECT_THROW(is_tmes(PureState::basis("0")), Error);
}

TEST(IsTmes, BellIsTmes) {
  const TmesVerdict v = is_tmes(bell());
  EXPECT_TRUE(v.is_tmes);
  EXPECT_EQ(v.sdc_messages, 4u);
}

TEST(QubitSubsets, LexicographicOrder) {
  EXPECT_EQ(qubit_subsets(4, 2),
            (std::vector<QubitList>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
  EXPECT_EQ(qubit_subsets(3, 3).size(), 1u);
}

// Properties ---------------------------------------------------------------

TEST(Property, SenderSideInvariance) {
  Rng rng(21);
  const PureState base = cluster();
  for (int t = 0; t < 20; ++t) {
    const PureState s = apply_local(base, haar_unitary(2, rng), QubitList{3, 1});
    EXPECT_EQ(teleport_capacity(s, kOddEven), 2);
    EXPECT_EQ(sdc_max_messages(s, {1, 3}), 16u);
  }
  for (int t = 0; t < 10; ++t) {
    const PureState g = apply_local(ghz(4), haar_unitary(1, rng), QubitList{3});
    EXPECT_EQ(teleport_capacity(g, kOddEven), 1);
    EXPECT_EQ(sdc_max_messages(g, {1, 3}), 8u);
  }
}

TEST(Property, MonotoneInPayloadSize) {
  expect_perfect(cluster(), kOddEven, 1, 31);
  expect_perfect(five_qubit(), Partition({1, 3, 5}, {2, 4}), 1, 32);
  expect_perfect(make_state(spec::BellProduct{3}), Partition({1, 3, 5}, {2, 4, 6}), 2, 33);
}

// The protocol builder without the capacity gate is run for every payload
// size; the largest size simulated with unit fidelity must equal the
// spectral capacity.
TEST(Property, SpectralCapacityMatchesSimulation) {
  const std::vector<PureState> states = {
      bell(), ghz(3), ghz(4), make_state(spec::Omega{}), make_state(spec::Chi{}),
      make_state(spec::Hs{}), make_state(spec::WClass{2.0}), make_state(spec::BellProduct{2}),
      cluster(), five_qubit()};
  Rng rng(41);
  for (const auto& s : states) {
    const int n = s.num_qubits();
    for (int size : {n / 2, (n + 1) / 2}) {
      for (const auto& sender : qubit_subsets(n, size)) {
        const Partition cut = Partition::from_sender(sender, n);
        const int limit = static_cast<int>(std::min(cut.sender().size(), cut.receiver().size()));
        int best = 0;
        for (int p = 1; p <= limit; ++p) {
          const TeleportProtocol proto = build_teleport_protocol(s, cut, p, false);
          bool perfect = true;
          for (int t = 0; t < 20 && perfect; ++t) {
            perfect = simulate_teleportation(s, proto, haar_state(p, rng)).min_fidelity >=
                      1.0 - 1e-9;
          }
          if (perfect) best = p;
        }
        EXPECT_EQ(teleport_capacity(s, cut), best) << cut.str() << " n=" << n;
      }
    }
  }
}

TEST(Property, FastPathAgreesWithExhaustiveSearch) {
  const std::vector<std::pair<PureState, QubitList>> cases = {
      {bell(), {1}}, {cluster(), {1, 3}}, {make_state(spec::Chi{}), {1, 2}},
      {make_state(spec::Omega{}), {1, 3}}, {ghz(3), {2}},
      {make_state(spec::BellProduct{3}), {1, 3, 5}}};
  for (const auto& [s, sender] : cases) {
    const SdcAnalysis fast = analyze_sdc(s, sender);
    ASSERT_TRUE(fast.fast_path_used) << format_qubit_list(sender);
    SdcOptions exhaustive;
    exhaustive.fast_path = false;
    const SdcAnalysis slow = analyze_sdc(s, sender, exhaustive);
    EXPECT_FALSE(slow.fast_path_used);
    EXPECT_EQ(fast.max_messages, slow.max_messages);
    EXPECT_EQ(fast.max_messages, std::size_t{1} << (2 * sender.size()));
  }
}

TEST(Property, UniformOutcomeProbabilitiesOnRotatedResource) {
  Rng rng(51);
  const PureState s = apply_local(cluster(), haar_unitary(2, rng), QubitList{2, 4});
  expect_perfect(s, kOddEven, 2, 52);
}

}  // namespace
}  // namespace tmes
