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

// Local-unitary invariants built from bipartition Schmidt spectra.

#include <vector>

#include "tmes/statevec.hpp"

namespace tmes {

struct CutSpectrum {
  /// The smaller side; for equal sizes, the side holding qubit 1.
  QubitList side;
  SchmidtSpectrum spectrum;
};

/// Every bipartition (2^{n-1} - 1 of them) ordered by side size, then
/// lexicographically. Throws above 12 qubits.
std::vector<CutSpectrum> all_bipartition_spectra(const PureState& state);

/// True when the spectra have equal length and agree entrywise within
/// `tol::kCluster` relative to the larger entry.
bool same_spectrum(const SchmidtSpectrum& a, const SchmidtSpectrum& b);

struct CutViolation {
  QubitList side;
  SchmidtSpectrum source;
  SchmidtSpectrum target;
};

/// Cuts where a unitary confined to `acting_subset` cannot change the
/// spectrum (the subset lies entirely on one side) but the spectra differ.
/// A non-empty report proves the conversion impossible; an empty one only
/// means none of these invariants rules it out.
struct ObstructionReport {
  QubitList acting_subset;
  std::vector<CutViolation> violated_cuts;
  std::size_t cuts_checked = 0;

  bool obstructed() const { return !violated_cuts.empty(); }
};

ObstructionReport conversion_obstruction(const PureState& source, const PureState& target,
                                         const QubitList& acting_subset);

/// No bipartition has Schmidt rank 1.
bool genuine_multipartite(const PureState& state);

struct OrthogonalFamily {
  QubitList subset;
  std::vector<std::vector<int>> labels;  // Pauli string per member
  std::vector<PureState> states;
  CMatrix gram;
  /// Indices of one maximum mutually orthogonal subfamily.
  std::vector<std::size_t> orthogonal_subfamily;
  /// Distinct members up to a global phase.
  std::size_t distinct_classes = 0;

  bool all_orthogonal(double tolerance = tol::kNorm) const;
};

/// Applies all 4^|subset| Pauli strings to `subset` of `state`.
OrthogonalFamily orthogonal_family(const PureState& state, const QubitList& subset);

}  // namespace tmes
