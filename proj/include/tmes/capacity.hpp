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

// Operational verdicts for a shared resource state: how many qubits it can
// teleport across a cut, how many messages dense coding can carry, and
// whether both reach the maximum for the state's size.

#include <cstddef>
#include <optional>
#include <vector>

#include "tmes/statevec.hpp"

namespace tmes {

/// Largest k <= min(|sender|, |receiver|) such that every distinct value in
/// the cut's Schmidt spectrum (clustered at `tol::kCluster` relative) has a
/// multiplicity divisible by 2^k. Equivalently, the resource is locally
/// equivalent to k Bell pairs across the cut tensored with a leftover pure
/// state.
int teleport_capacity(const PureState& state, const Partition& cut);

/// Measurement and correction data for teleporting `n_payload` qubits.
///
/// Registers:
///  - measurement vectors live on (payload, sender) with the payload most
///    significant and sender qubits in ascending order;
///  - `receiver_frame` acts on all receiver qubits in ascending order and
///    rotates the receiver's Schmidt basis so that the teleported state lands
///    on `output_qubits` (the first `n_payload` receiver qubits);
///  - `corrections[i]` acts on `output_qubits`.
///
/// Outcome i groups one orthonormal vector per block of the Schmidt
/// decomposition; for a resource that is exactly Bell pairs (one block) each
/// outcome is a single vector. Vectors outside the listed span are reached
/// with probability zero and are not materialized.
struct TeleportProtocol {
  Partition cut;
  int n_payload = 0;
  std::vector<std::vector<int>> pauli_labels;
  std::vector<std::vector<CVector>> measurement_family;
  std::vector<LocalOperator> corrections;
  LocalOperator receiver_frame;
  QubitList output_qubits;

  std::size_t num_outcomes() const { return measurement_family.size(); }
  /// Largest |<O_a|O_b> - delta_ab| across every listed vector.
  double orthonormality_defect() const;
};

/// Builds the protocol from the Schmidt decomposition across `cut`: Schmidt
/// vectors are taken in descending order in chunks of 2^n_payload and each
/// chunk supplies one maximally entangled block. With `require_capacity`
/// set, throws unless teleport_capacity(state, cut) >= n_payload, which
/// guarantees every chunk is uniform. Clearing it builds the same protocol
/// regardless; it is then exact only when the chunks happen to be uniform,
/// which makes it usable as an independent probe of the capacity.
TeleportProtocol build_teleport_protocol(const PureState& state, const Partition& cut,
                                         int n_payload, bool require_capacity = true);

struct TeleportOutcome {
  std::vector<int> label;
  double probability = 0.0;
  /// <payload| rho_out |payload> after correction; 0 when the outcome has
  /// probability below 1e-12.
  double fidelity = 0.0;
};

struct TeleportRun {
  std::vector<TeleportOutcome> outcomes;
  double total_probability = 0.0;
  /// Minimum fidelity over outcomes with nonzero probability.
  double min_fidelity = 1.0;
};

/// Exact simulation: payload qubits precede the resource, each outcome is
/// projected, the receiver applies `receiver_frame` and the correction, and
/// the output qubits are compared with `payload`.
TeleportRun simulate_teleportation(const PureState& resource,
                                   const TeleportProtocol& protocol,
                                   const PureState& payload);

/// Builds the protocol for payload.num_qubits() and runs it.
TeleportRun simulate_teleportation(const PureState& resource, const Partition& cut,
                                   const PureState& payload);

struct SdcOptions {
  /// Skip the clique search when the sender's reduced state is maximally
  /// mixed.
  bool fast_path = true;
  /// Encoded states count as orthogonal when |<a|b>| is at most this.
  double tolerance = tol::kNorm;
};

struct SdcAnalysis {
  std::size_t max_messages = 0;
  /// Pauli codes (base-4, first sender qubit most significant) of one
  /// maximum orthogonal set, ascending.
  std::vector<std::size_t> codes;
  bool fast_path_used = false;
  /// min(4^|sender|, 2^|sender| * rank of the receiver's reduced state).
  std::size_t dimension_bound = 0;
};

/// Dense-coding analysis with Pauli-string encodings on `sender` (the set of
/// qubits Alice applies encodings to and then sends).
SdcAnalysis analyze_sdc(const PureState& state, const QubitList& sender,
                        const SdcOptions& options = {});

std::size_t sdc_max_messages(const PureState& state, const QubitList& sender,
                             const SdcOptions& options = {});

struct SdcCodebook {
  QubitList sender;
  std::vector<std::vector<int>> encodings;
  std::vector<PureState> encoded_states;

  std::size_t size() const { return encodings.size(); }
  /// Largest |<e_a|e_b>| over distinct codewords.
  double max_overlap() const;
};

/// Codebook with `messages` codewords taken from a maximum orthogonal set
/// (all of it when `messages` is 0). Throws when fewer orthogonal encodings
/// exist.
SdcCodebook build_sdc_codebook(const PureState& state, const QubitList& sender,
                               std::size_t messages = 0);

struct SdcDecode {
  std::size_t decoded = 0;
  double probability = 0.0;  // of the decoded outcome
};

/// Encodes `message_index`, then measures projectively in the codebook basis.
SdcDecode simulate_sdc(const PureState& state, const SdcCodebook& codebook,
                       std::size_t message_index);

struct TmesVerdict {
  bool is_tmes = false;
  int teleport_qubits = 0;
  std::size_t sdc_messages = 0;
  int teleport_threshold = 0;
  std::size_t sdc_threshold = 0;
  std::optional<Partition> witnessing_partition;
  std::optional<QubitList> sdc_sender;
};

/// Even n: some n/2 | n/2 cut teleports n/2 qubits and some n/2-qubit sender
/// set carries 2^n messages. Odd n: (n-1)/2 qubits and 2^n messages with a
/// (n+1)/2-qubit sender. Partitions are searched existentially, odd-indexed
/// sender first, then lexicographically.
TmesVerdict is_tmes(const PureState& state);

/// All k-subsets of 1..n in lexicographic order.
std::vector<QubitList> qubit_subsets(int num_qubits, int k);

}  // namespace tmes
