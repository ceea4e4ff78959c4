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

#include "tmes/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tmes/clique.hpp"
#include "tmes/operators.hpp"

namespace tmes {

namespace {

constexpr double kProbabilityFloor = 1e-12;

void check_cut(const PureState& state, const Partition& cut) {
  if (cut.num_qubits() != state.num_qubits()) {
    throw Error("partition " + cut.str() + " does not match a " +
                std::to_string(state.num_qubits()) + "-qubit state");
  }
}

void check_sender(const PureState& state, const QubitList& sender) {
  if (sender.empty()) throw Error("sender set must be non-empty");
  if (static_cast<int>(sender.size()) >= state.num_qubits()) {
    throw Error("sender set must be a proper subset of the qubits");
  }
  // Validates range and duplicates.
  (void)Partition::from_sender(sender, state.num_qubits());
}

QubitList shifted(const QubitList& qubits, int offset) {
  QubitList out = qubits;
  for (Qubit& q : out) q += offset;
  return out;
}

std::size_t count_nonzero(const std::vector<double>& values) {
  return static_cast<std::size_t>(std::count_if(
      values.begin(), values.end(), [](double v) { return v >= tol::kZeroEigen; }));
}

// Orthonormal vector orthogonal to `basis`, built from the first
// computational basis vector with a nonzero residual.
CVector complete_basis(const std::vector<CVector>& basis, Eigen::Index dim) {
  for (Eigen::Index e = 0; e < dim; ++e) {
    CVector v = CVector::Zero(dim);
    v[e] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (const CVector& b : basis) v -= b.dot(v) * b;
    }
    const double n = v.norm();
    if (n > 1e-6) return v / n;
  }
  throw Error("no room to extend the sender basis");
}

}  // namespace

int teleport_capacity(const PureState& state, const Partition& cut) {
  check_cut(state, cut);
  const SchmidtSpectrum spectrum = schmidt_spectrum(state, cut);
  const auto runs = cluster_multiplicities(spectrum.eigenvalues);
  const int limit = static_cast<int>(std::min(cut.sender().size(), cut.receiver().size()));
  for (int k = limit; k > 0; --k) {
    const std::size_t block = std::size_t{1} << k;
    if (std::all_of(runs.begin(), runs.end(),
                    [block](std::size_t m) { return m % block == 0; })) {
      return k;
    }
  }
  return 0;
}

double TeleportProtocol::orthonormality_defect() const {
  std::vector<const CVector*> all;
  for (const auto& group : measurement_family) {
    for (const auto& v : group) all.push_back(&v);
  }
  double worst = 0.0;
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = a; b < all.size(); ++b) {
      const Complex ip = all[a]->dot(*all[b]);
      worst = std::max(worst, std::abs(ip - (a == b ? Complex(1.0) : Complex(0.0))));
    }
  }
  return worst;
}

TeleportProtocol build_teleport_protocol(const PureState& state, const Partition& cut,
                                         int n_payload, bool require_capacity) {
  check_cut(state, cut);
  const int ns = static_cast<int>(cut.sender().size());
  const int nr = static_cast<int>(cut.receiver().size());
  if (n_payload < 1 || n_payload > std::min(ns, nr)) {
    throw Error("payload of " + std::to_string(n_payload) + " qubits does not fit cut " +
                cut.str());
  }
  if (require_capacity) {
    const int capacity = teleport_capacity(state, cut);
    if (capacity < n_payload) {
      throw Error("cut " + cut.str() + " teleports " + std::to_string(capacity) +
                  " qubit(s), " + std::to_string(n_payload) + " requested");
    }
  }

  const int n = state.num_qubits();
  const std::size_t chunk = std::size_t{1} << n_payload;
  const auto dim_s = static_cast<Eigen::Index>(dim_of(ns));
  const auto dim_r = static_cast<Eigen::Index>(dim_of(nr));

  // Receiver Schmidt basis, descending.
  const EigenSystem eig =
      hermitian_eigen(reduced_matrix(state.amplitudes(), n, cut.receiver()));
  const std::size_t rank = count_nonzero(eig.values);
  const std::size_t used = (rank + chunk - 1) / chunk * chunk;

  // Sender partners a_j = M conj(b_j) / sqrt(lambda_j), completed with
  // arbitrary orthonormal vectors for padded zero-weight slots.
  const CMatrix m = split_amplitudes(state.amplitudes(), n, cut.sender(), cut.receiver());
  std::vector<CVector> partners;
  partners.reserve(used);
  for (std::size_t j = 0; j < rank; ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    partners.push_back(m * eig.vectors.col(jj).conjugate() / std::sqrt(eig.values[j]));
  }
  while (partners.size() < used) partners.push_back(complete_basis(partners, dim_s));

  // Receiver frame: Schmidt vector j -> |j mod 2^p>_{out} |j / 2^p>_{rest}.
  const auto rest = static_cast<Eigen::Index>(dim_of(nr - n_payload));
  CMatrix frame(dim_r, dim_r);
  for (Eigen::Index j = 0; j < dim_r; ++j) {
    const Eigen::Index k = j % static_cast<Eigen::Index>(chunk);
    const Eigen::Index block = j / static_cast<Eigen::Index>(chunk);
    frame.row(k * rest + block) = eig.vectors.col(j).adjoint();
  }

  TeleportProtocol protocol{
      .cut = cut,
      .n_payload = n_payload,
      .pauli_labels = {},
      .measurement_family = {},
      .corrections = {},
      .receiver_frame = LocalOperator(nr, std::move(frame)),
      .output_qubits = QubitList(cut.receiver().begin(),
                                 cut.receiver().begin() + n_payload),
  };

  const double scale = 1.0 / std::sqrt(static_cast<double>(chunk));
  const std::size_t num_labels = chunk * chunk;
  const std::size_t blocks = used / chunk;
  for (std::size_t code = 0; code < num_labels; ++code) {
    auto label = pauli_digits(code, n_payload);
    const LocalOperator pauli = real_pauli_string(label);
    std::vector<CVector> group;
    group.reserve(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
      // O = 2^{-p/2} sum_k (P|k>) (x) a_{b*2^p + k}
      CVector o = CVector::Zero(static_cast<Eigen::Index>(chunk) * dim_s);
      for (std::size_t k = 0; k < chunk; ++k) {
        const CVector& a = partners[b * chunk + k];
        for (std::size_t x = 0; x < chunk; ++x) {
          const Complex c = pauli.matrix()(static_cast<Eigen::Index>(x),
                                           static_cast<Eigen::Index>(k));
          if (c == Complex(0.0)) continue;
          o.segment(static_cast<Eigen::Index>(x) * dim_s, dim_s) += scale * c * a;
        }
      }
      group.push_back(std::move(o));
    }
    protocol.pauli_labels.push_back(std::move(label));
    protocol.measurement_family.push_back(std::move(group));
    protocol.corrections.push_back(pauli);
  }
  return protocol;
}

TeleportRun simulate_teleportation(const PureState& resource, const TeleportProtocol& protocol,
                                   const PureState& payload) {
  check_cut(resource, protocol.cut);
  const int p = payload.num_qubits();
  if (p != protocol.n_payload) {
    throw Error("payload has " + std::to_string(p) + " qubits, protocol expects " +
                std::to_string(protocol.n_payload));
  }
  const int total = p + resource.num_qubits();
  const PureState joint = tensor(payload, resource);

  QubitList alice;
  for (Qubit q = 1; q <= p; ++q) alice.push_back(q);
  const QubitList sender = shifted(protocol.cut.sender(), p);
  alice.insert(alice.end(), sender.begin(), sender.end());
  const QubitList bob = shifted(protocol.cut.receiver(), p);
  const int nr = static_cast<int>(bob.size());

  // Rows: (payload, sender); columns: receiver.
  const CMatrix x = split_amplitudes(joint.amplitudes(), total, alice, bob);

  QubitList out_local;
  for (Qubit q = 1; q <= p; ++q) out_local.push_back(q);

  TeleportRun run;
  for (std::size_t i = 0; i < protocol.num_outcomes(); ++i) {
    // Correction on the output qubits, identity on the rest, after the frame.
    const auto rest = static_cast<Eigen::Index>(dim_of(nr - p));
    const CMatrix& v = protocol.corrections[i].matrix();
    CMatrix lifted = CMatrix::Zero(v.rows() * rest, v.cols() * rest);
    for (Eigen::Index a = 0; a < v.rows(); ++a) {
      for (Eigen::Index b = 0; b < v.cols(); ++b) {
        lifted.block(a * rest, b * rest, rest, rest).diagonal().setConstant(v(a, b));
      }
    }
    const CMatrix bob_op = lifted * protocol.receiver_frame.matrix();

    CMatrix rho = CMatrix::Zero(static_cast<Eigen::Index>(dim_of(p)),
                                static_cast<Eigen::Index>(dim_of(p)));
    double prob = 0.0;
    for (const CVector& o : protocol.measurement_family[i]) {
      // (<O| (x) I) Psi over the receiver register.
      const CVector bob_state = bob_op * (x.transpose() * o.conjugate());
      prob += bob_state.squaredNorm();
      rho += reduced_matrix(bob_state, nr, out_local);
    }

    TeleportOutcome outcome{protocol.pauli_labels[i], prob, 0.0};
    if (prob > kProbabilityFloor) {
      rho /= prob;
      outcome.fidelity =
          std::real(payload.amplitudes().dot(rho * payload.amplitudes()));
      run.min_fidelity = std::min(run.min_fidelity, outcome.fidelity);
    }
    run.total_probability += prob;
    run.outcomes.push_back(std::move(outcome));
  }
  return run;
}

TeleportRun simulate_teleportation(const PureState& resource, const Partition& cut,
                                   const PureState& payload) {
  return simulate_teleportation(
      resource, build_teleport_protocol(resource, cut, payload.num_qubits()), payload);
}

SdcAnalysis analyze_sdc(const PureState& state, const QubitList& sender,
                        const SdcOptions& options) {
  check_sender(state, sender);
  const int n = state.num_qubits();
  const int ns = static_cast<int>(sender.size());
  const std::size_t num_codes = std::size_t{1} << (2 * ns);

  SdcAnalysis out;
  const Partition cut = Partition::from_sender(sender, n);
  const std::size_t receiver_rank =
      count_nonzero(DensityMatrix{0, reduced_matrix(state.amplitudes(), n, cut.receiver())}
                        .eigenvalues());
  out.dimension_bound = std::min(num_codes, dim_of(ns) * receiver_rank);

  if (options.fast_path) {
    const CMatrix rho = reduced_matrix(state.amplitudes(), n, sender);
    const auto d = static_cast<Eigen::Index>(dim_of(ns));
    const CMatrix mixed = CMatrix::Identity(d, d) / static_cast<double>(d);
    if ((rho - mixed).cwiseAbs().maxCoeff() <= tol::kNorm) {
      out.fast_path_used = true;
      out.max_messages = num_codes;
      out.codes.resize(num_codes);
      std::iota(out.codes.begin(), out.codes.end(), std::size_t{0});
      return out;
    }
  }

  CMatrix encoded(static_cast<Eigen::Index>(state.dim()), static_cast<Eigen::Index>(num_codes));
  for (std::size_t code = 0; code < num_codes; ++code) {
    CVector amps = state.amplitudes();
    apply_matrix(amps, n, real_pauli_string(pauli_digits(code, ns)).matrix(), sender);
    encoded.col(static_cast<Eigen::Index>(code)) = amps;
  }
  const CMatrix gram = encoded.adjoint() * encoded;

  Graph graph(num_codes);
  for (std::size_t a = 0; a < num_codes; ++a) {
    for (std::size_t b = a + 1; b < num_codes; ++b) {
      if (std::abs(gram(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b))) <=
          options.tolerance) {
        graph.add_edge(a, b);
      }
    }
  }
  out.codes = maximum_clique(graph, out.dimension_bound);
  out.max_messages = out.codes.size();
  return out;
}

std::size_t sdc_max_messages(const PureState& state, const QubitList& sender,
                             const SdcOptions& options) {
  return analyze_sdc(state, sender, options).max_messages;
}

double SdcCodebook::max_overlap() const {
  double worst = 0.0;
  for (std::size_t a = 0; a < encoded_states.size(); ++a) {
    for (std::size_t b = a + 1; b < encoded_states.size(); ++b) {
      worst = std::max(worst, std::abs(overlap(encoded_states[a], encoded_states[b])));
    }
  }
  return worst;
}

SdcCodebook build_sdc_codebook(const PureState& state, const QubitList& sender,
                               std::size_t messages) {
  const SdcAnalysis analysis = analyze_sdc(state, sender);
  if (messages == 0) messages = analysis.max_messages;
  if (messages > analysis.max_messages) {
    throw Error("only " + std::to_string(analysis.max_messages) +
                " orthogonal encodings on sender {" + format_qubit_list(sender) + "}, " +
                std::to_string(messages) + " requested");
  }
  SdcCodebook book;
  book.sender = sender;
  const int ns = static_cast<int>(sender.size());
  for (std::size_t i = 0; i < messages; ++i) {
    auto digits = pauli_digits(analysis.codes[i], ns);
    book.encoded_states.push_back(apply_local(state, real_pauli_string(digits), sender));
    book.encodings.push_back(std::move(digits));
  }
  return book;
}

SdcDecode simulate_sdc(const PureState& state, const SdcCodebook& codebook,
                       std::size_t message_index) {
  if (message_index >= codebook.size()) {
    throw Error("message " + std::to_string(message_index) + " outside a codebook of " +
                std::to_string(codebook.size()));
  }
  const PureState sent =
      apply_local(state, real_pauli_string(codebook.encodings[message_index]), codebook.sender);
  SdcDecode out;
  double best = -1.0;
  for (std::size_t j = 0; j < codebook.size(); ++j) {
    const double p = std::norm(overlap(codebook.encoded_states[j], sent));
    if (p > best) {
      best = p;
      out.decoded = j;
    }
  }
  out.probability = best;
  return out;
}

std::vector<QubitList> qubit_subsets(int num_qubits, int k) {
  std::vector<QubitList> out;
  if (k < 0 || k > num_qubits) return out;
  QubitList current;
  auto rec = [&](auto&& self, Qubit next) -> void {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (Qubit q = next; q <= num_qubits; ++q) {
      current.push_back(q);
      self(self, q + 1);
      current.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

TmesVerdict is_tmes(const PureState& state) {
  const int n = state.num_qubits();
  if (n < 2) throw Error("TMES verdict needs at least two qubits");
  const int sender_size = (n + 1) / 2;

  TmesVerdict v;
  v.teleport_threshold = n / 2;
  v.sdc_threshold = dim_of(n);

  std::vector<QubitList> senders;
  QubitList odd;
  for (Qubit q = 1; q <= n; q += 2) odd.push_back(q);
  senders.push_back(odd);
  for (auto& s : qubit_subsets(n, sender_size)) {
    if (s != odd) senders.push_back(std::move(s));
  }

  for (const QubitList& sender : senders) {
    const Partition cut = Partition::from_sender(sender, n);
    if (v.teleport_qubits < v.teleport_threshold) {
      const int k = teleport_capacity(state, cut);
      if (k > v.teleport_qubits || !v.witnessing_partition) {
        v.teleport_qubits = k;
        v.witnessing_partition = cut;
      }
    }
    if (v.sdc_messages < v.sdc_threshold) {
      const std::size_t m = sdc_max_messages(state, sender);
      if (m > v.sdc_messages) {
        v.sdc_messages = m;
        v.sdc_sender = sender;
      }
    }
    if (v.teleport_qubits >= v.teleport_threshold && v.sdc_messages >= v.sdc_threshold) break;
  }
  v.is_tmes = v.teleport_qubits >= v.teleport_threshold && v.sdc_messages >= v.sdc_threshold;
  return v;
}

}  // namespace tmes
