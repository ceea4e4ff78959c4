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

#include "tmes/lu_invariants.hpp"

#include <algorithm>
#include <cmath>

#include "tmes/capacity.hpp"
#include "tmes/clique.hpp"
#include "tmes/operators.hpp"

namespace tmes {

namespace {

constexpr int kMaxCutQubits = 12;

// Canonical sides: sizes 1..n/2, and at size n/2 (even n) only sides with
// qubit 1.
std::vector<QubitList> canonical_sides(int n) {
  std::vector<QubitList> out;
  for (int k = 1; 2 * k <= n; ++k) {
    for (auto& side : qubit_subsets(n, k)) {
      if (2 * k == n && side.front() != 1) continue;
      out.push_back(std::move(side));
    }
  }
  return out;
}

bool contains_all(const QubitList& side, const QubitList& subset) {
  return std::all_of(subset.begin(), subset.end(), [&](Qubit q) {
    return std::find(side.begin(), side.end(), q) != side.end();
  });
}

bool disjoint(const QubitList& side, const QubitList& subset) {
  return std::none_of(subset.begin(), subset.end(), [&](Qubit q) {
    return std::find(side.begin(), side.end(), q) != side.end();
  });
}

}  // namespace

std::vector<CutSpectrum> all_bipartition_spectra(const PureState& state) {
  const int n = state.num_qubits();
  if (n > kMaxCutQubits) {
    throw Error("bipartition scan limited to " + std::to_string(kMaxCutQubits) + " qubits");
  }
  std::vector<CutSpectrum> out;
  if (n < 2) return out;
  for (auto& side : canonical_sides(n)) {
    auto spectrum = schmidt_spectrum(state, Partition::from_sender(side, n));
    out.push_back({std::move(side), std::move(spectrum)});
  }
  return out;
}

bool same_spectrum(const SchmidtSpectrum& a, const SchmidtSpectrum& b) {
  if (a.eigenvalues.size() != b.eigenvalues.size()) return false;
  for (std::size_t i = 0; i < a.eigenvalues.size(); ++i) {
    const double x = a.eigenvalues[i];
    const double y = b.eigenvalues[i];
    if (std::abs(x - y) > tol::kCluster * std::max(std::abs(x), std::abs(y))) return false;
  }
  return true;
}

ObstructionReport conversion_obstruction(const PureState& source, const PureState& target,
                                         const QubitList& acting_subset) {
  if (source.num_qubits() != target.num_qubits()) {
    throw Error("source and target have different qubit counts");
  }
  const int n = source.num_qubits();
  // Validates the subset.
  if (!acting_subset.empty() && static_cast<int>(acting_subset.size()) < n) {
    (void)Partition::from_sender(acting_subset, n);
  }

  ObstructionReport report;
  report.acting_subset = acting_subset;
  std::sort(report.acting_subset.begin(), report.acting_subset.end());
  if (n < 2) return report;
  for (const auto& side : canonical_sides(n)) {
    if (!contains_all(side, report.acting_subset) && !disjoint(side, report.acting_subset)) {
      continue;
    }
    ++report.cuts_checked;
    const Partition cut = Partition::from_sender(side, n);
    auto s = schmidt_spectrum(source, cut);
    auto t = schmidt_spectrum(target, cut);
    if (!same_spectrum(s, t)) report.violated_cuts.push_back({side, std::move(s), std::move(t)});
  }
  return report;
}

bool genuine_multipartite(const PureState& state) {
  const int n = state.num_qubits();
  if (n < 2) throw Error("genuine multipartite entanglement needs at least two qubits");
  for (const auto& side : canonical_sides(n)) {
    if (schmidt_spectrum(state, Partition::from_sender(side, n)).is_product()) return false;
  }
  return true;
}

bool OrthogonalFamily::all_orthogonal(double tolerance) const {
  for (Eigen::Index a = 0; a < gram.rows(); ++a) {
    for (Eigen::Index b = 0; b < gram.cols(); ++b) {
      const Complex want = a == b ? Complex(1.0) : Complex(0.0);
      if (std::abs(gram(a, b) - want) > tolerance) return false;
    }
  }
  return true;
}

OrthogonalFamily orthogonal_family(const PureState& state, const QubitList& subset) {
  const int n = state.num_qubits();
  if (subset.empty()) throw Error("subset must be non-empty");
  {
    // A full-size subset is allowed here, unlike a sender set.
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (Qubit q : subset) {
      if (q < 1 || q > n || seen[static_cast<std::size_t>(q)]) {
        throw Error("invalid subset {" + format_qubit_list(subset) + "}");
      }
      seen[static_cast<std::size_t>(q)] = true;
    }
  }

  OrthogonalFamily fam;
  fam.subset = subset;
  const int k = static_cast<int>(subset.size());
  const std::size_t count = std::size_t{1} << (2 * k);
  for (std::size_t code = 0; code < count; ++code) {
    auto label = pauli_digits(code, k);
    fam.states.push_back(apply_local(state, real_pauli_string(label), subset));
    fam.labels.push_back(std::move(label));
  }

  const auto m = static_cast<Eigen::Index>(count);
  fam.gram = CMatrix(m, m);
  Graph graph(count);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index b = 0; b < m; ++b) {
      fam.gram(a, b) = overlap(fam.states[static_cast<std::size_t>(a)],
                               fam.states[static_cast<std::size_t>(b)]);
      if (a < b && std::abs(fam.gram(a, b)) <= tol::kNorm) {
        graph.add_edge(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      }
    }
  }
  fam.orthogonal_subfamily = maximum_clique(graph, std::min(count, state.dim()));

  std::vector<bool> assigned(count, false);
  for (std::size_t a = 0; a < count; ++a) {
    if (assigned[a]) continue;
    ++fam.distinct_classes;
    for (std::size_t b = a; b < count; ++b) {
      const double ov = std::abs(fam.gram(static_cast<Eigen::Index>(a),
                                          static_cast<Eigen::Index>(b)));
      if (std::abs(ov - 1.0) <= tol::kNorm) assigned[b] = true;
    }
  }
  return fam;
}

}  // namespace tmes
