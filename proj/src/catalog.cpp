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

#include "tmes/catalog.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>
#include <vector>

namespace tmes {

namespace {

using Term = std::pair<Complex, const char*>;

PureState from_terms(int num_qubits, double scale, const std::vector<Term>& terms) {
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(dim_of(num_qubits)));
  for (const auto& [coeff, bits] : terms) {
    amps[static_cast<Eigen::Index>(std::stoul(bits, nullptr, 2))] += scale * coeff;
  }
  return PureState(num_qubits, std::move(amps));
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

int parse_positive(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw Error("bad " + what + ": '" + text + "'");
  }
  if (used != text.size() || v < 1) throw Error("bad " + what + ": '" + text + "'");
  return v;
}

}  // namespace

PureState make_state(const StateSpec& spec) {
  const double r2 = 1.0 / std::numbers::sqrt2;
  return std::visit(
      Overloaded{
          [&](const spec::Bell& b) {
            switch (b.which) {
              case BellKind::kPhiPlus:
                return from_terms(2, r2, {{1.0, "00"}, {1.0, "11"}});
              case BellKind::kPhiMinus:
                return from_terms(2, r2, {{1.0, "00"}, {-1.0, "11"}});
              case BellKind::kPsiPlus:
                return from_terms(2, r2, {{1.0, "01"}, {1.0, "10"}});
              case BellKind::kPsiMinus:
                return from_terms(2, r2, {{1.0, "01"}, {-1.0, "10"}});
            }
            throw Error("unknown Bell state");
          },
          [&](const spec::Ghz& g) {
            if (g.num_qubits < 1) throw Error("GHZ needs at least one qubit");
            CVector amps = CVector::Zero(static_cast<Eigen::Index>(dim_of(g.num_qubits)));
            amps[0] = r2;
            amps[amps.size() - 1] = r2;
            return PureState(g.num_qubits, std::move(amps));
          },
          [&](const spec::Omega&) {
            return from_terms(4, 0.5,
                              {{1.0, "0000"}, {1.0, "0110"}, {1.0, "1001"}, {-1.0, "1111"}});
          },
          [&](const spec::Chi&) {
            return from_terms(4, 1.0 / (2.0 * std::numbers::sqrt2),
                              {{1.0, "0000"},
                               {-1.0, "0011"},
                               {-1.0, "0101"},
                               {1.0, "0110"},
                               {1.0, "1001"},
                               {1.0, "1010"},
                               {1.0, "1100"},
                               {1.0, "1111"}});
          },
          [&](const spec::Hs&) {
            const double angle = 2.0 * std::numbers::pi / 3.0;
            const Complex w(std::cos(angle), std::sin(angle));
            return from_terms(4, 1.0 / std::sqrt(6.0),
                              {{1.0, "0011"},
                               {1.0, "1100"},
                               {w, "1010"},
                               {w, "0101"},
                               {w * w, "1001"},
                               {w * w, "0110"}});
          },
          [&](const spec::WClass& w) {
            if (!(w.n >= 1.0)) throw Error("W-class parameter must be >= 1");
            return from_terms(3, 1.0 / std::sqrt(2.0 + 2.0 * w.n),
                              {{1.0, "100"},
                               {std::sqrt(w.n), "010"},
                               {std::sqrt(w.n + 1.0), "001"}});
          },
          [&](const spec::BellProduct& p) {
            if (p.pairs < 1) throw Error("Bell product needs at least one pair");
            PureState out = bell();
            for (int k = 1; k < p.pairs; ++k) out = tensor(out, bell());
            return out;
          },
          [&](const spec::OddResource& p) {
            return tensor(make_state(spec::BellProduct{p.pairs}), PureState::basis("0"));
          },
          [&](const spec::Basis& b) { return PureState::basis(b.bits); },
      },
      spec);
}

StateSpec parse_state_spec(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  const bool has_arg = colon != std::string::npos;

  if (head == "omega" && !has_arg) return spec::Omega{};
  if (head == "chi" && !has_arg) return spec::Chi{};
  if (head == "hs" && !has_arg) return spec::Hs{};
  if (head == "bell") {
    if (arg == "phi+") return spec::Bell{BellKind::kPhiPlus};
    if (arg == "phi-") return spec::Bell{BellKind::kPhiMinus};
    if (arg == "psi+") return spec::Bell{BellKind::kPsiPlus};
    if (arg == "psi-") return spec::Bell{BellKind::kPsiMinus};
    throw Error("unknown Bell state '" + arg + "' (phi+, phi-, psi+, psi-)");
  }
  if (head == "ghz") return spec::Ghz{parse_positive(arg, "GHZ size")};
  if (head == "bell_product") return spec::BellProduct{parse_positive(arg, "pair count")};
  if (head == "odd_resource") return spec::OddResource{parse_positive(arg, "pair count")};
  if (head == "basis" && has_arg) return spec::Basis{arg};
  if (head == "w") {
    std::size_t used = 0;
    double n = 0.0;
    try {
      n = std::stod(arg, &used);
    } catch (const std::exception&) {
      throw Error("bad W-class parameter '" + arg + "'");
    }
    if (used != arg.size() || !(n >= 1.0)) throw Error("bad W-class parameter '" + arg + "'");
    return spec::WClass{n};
  }
  throw Error("unknown state spec '" + text + "'");
}

std::string to_string(const StateSpec& spec) {
  return std::visit(
      Overloaded{
          [](const spec::Bell& b) -> std::string {
            switch (b.which) {
              case BellKind::kPhiPlus: return "bell:phi+";
              case BellKind::kPhiMinus: return "bell:phi-";
              case BellKind::kPsiPlus: return "bell:psi+";
              case BellKind::kPsiMinus: return "bell:psi-";
            }
            return "bell:?";
          },
          [](const spec::Ghz& g) -> std::string { return "ghz:" + std::to_string(g.num_qubits); },
          [](const spec::Omega&) -> std::string { return "omega"; },
          [](const spec::Chi&) -> std::string { return "chi"; },
          [](const spec::Hs&) -> std::string { return "hs"; },
          [](const spec::WClass& w) -> std::string {
            std::ostringstream os;
            os << "w:" << w.n;
            return os.str();
          },
          [](const spec::BellProduct& p) -> std::string {
            return "bell_product:" + std::to_string(p.pairs);
          },
          [](const spec::OddResource& p) -> std::string {
            return "odd_resource:" + std::to_string(p.pairs);
          },
          [](const spec::Basis& b) -> std::string { return "basis:" + b.bits; },
      },
      spec);
}

}  // namespace tmes
