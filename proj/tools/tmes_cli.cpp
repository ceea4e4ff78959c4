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

// tmes_cli: build states and operator families, analyse capacities and run
// the verification suite.
//
// Exit status: 0 success, 1 a check failed, 2 usage or input error.

#include <chrono>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tmes/capacity.hpp"
#include "tmes/catalog.hpp"
#include "tmes/claims.hpp"
#include "tmes/io.hpp"
#include "tmes/lu_invariants.hpp"
#include "tmes/operators.hpp"
#include "tmes/random.hpp"

namespace {

using namespace tmes;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Globals {
  double tol = 1e-9;
  std::uint64_t seed = 0;
};

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void emit(const nlohmann::json& doc, const std::string& out) {
  if (out.empty()) {
    std::cout << doc.dump(2) << '\n';
  } else {
    save_json(out, doc);
    std::cout << "wrote " << out << '\n';
  }
}

std::string spectrum_str(const SchmidtSpectrum& s) {
  std::ostringstream os;
  os << std::setprecision(6) << '{';
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
    if (i) os << ", ";
    os << s.eigenvalues[i];
  }
  os << '}';
  return os.str();
}

Partition cut_for(const PureState& s, const std::string& sender) {
  QubitList list;
  if (sender.empty()) {
    for (Qubit q = 1; q <= s.num_qubits(); q += 2) list.push_back(q);
  } else {
    list = parse_qubit_list(sender);
  }
  return Partition::from_sender(list, s.num_qubits());
}

// "op@1,3" applies the named operator to the listed targets.
PureState apply_spec(const PureState& s, const std::string& spec) {
  const auto at = spec.find('@');
  if (at == std::string::npos) throw Error("expected op@targets, got '" + spec + "'");
  return apply_local(s, named_operator(spec.substr(0, at)), parse_qubit_list(spec.substr(at + 1)));
}

int state_build(const std::string& spec, const std::vector<std::string>& ops,
                const std::string& out) {
  PureState s = make_state(parse_state_spec(spec));
  for (const auto& op : ops) s = apply_spec(s, op);
  emit(to_json(s), out);
  return kOk;
}

int state_show(const std::string& path) {
  const PureState s = state_from_json(load_json(path));
  std::cout << s.num_qubits() << " qubits, norm " << std::setprecision(12) << s.norm() << '\n';
  for (Eigen::Index i = 0; i < s.amplitudes().size(); ++i) {
    const Complex a = s.amplitudes()[i];
    if (std::abs(a) <= tol::kExact) continue;
    std::string bits;
    for (int b = s.num_qubits() - 1; b >= 0; --b) bits += ((i >> b) & 1) ? '1' : '0';
    std::cout << "  |" << bits << ">  " << std::setprecision(6) << a.real() << (a.imag() < 0 ? " - " : " + ")
              << std::abs(a.imag()) << "i\n";
  }
  if (s.num_qubits() >= 2) {
    std::cout << "bipartition spectra:\n";
    for (const auto& cs : all_bipartition_spectra(s)) {
      std::cout << "  {" << format_qubit_list(cs.side) << "}  " << spectrum_str(cs.spectrum) << '\n';
    }
  }
  return kOk;
}

int capacity_cmd(const std::string& path, const std::string& sender) {
  const PureState s = state_from_json(load_json(path));
  const Partition cut = cut_for(s, sender);
  const int k = teleport_capacity(s, cut);
  const SdcAnalysis sdc = analyze_sdc(s, cut.sender());
  std::cout << "cut " << cut.str() << '\n'
            << "receiver spectrum " << spectrum_str(schmidt_spectrum(s, cut)) << '\n'
            << "teleport capacity " << k << " qubit(s)\n"
            << "dense coding " << sdc.max_messages << " messages (bound " << sdc.dimension_bound
            << (sdc.fast_path_used ? ", maximally mixed sender" : "") << ")\n";
  return kOk;
}

int teleport_cmd(const std::string& path, const std::string& sender, int k, const Globals& g) {
  const PureState resource = state_from_json(load_json(path));
  const Partition cut = cut_for(resource, sender);
  const int cap = teleport_capacity(resource, cut);
  if (k > cap) {
    std::cout << "cut " << cut.str() << " teleports at most " << cap << " qubit(s), " << k
              << " requested\n";
    return kFailed;
  }
  Rng rng(g.seed);
  const PureState payload = haar_state(k, rng);
  const TeleportProtocol protocol = build_teleport_protocol(resource, cut, k);
  const TeleportRun run = simulate_teleportation(resource, protocol, payload);
  std::cout << "cut " << cut.str() << ", " << k << " payload qubit(s), " << run.outcomes.size()
            << " outcomes, output qubits {" << format_qubit_list(protocol.output_qubits) << "}\n";
  std::cout << std::setprecision(12);
  for (const auto& o : run.outcomes) {
    std::cout << "  P" << '[';
    for (std::size_t i = 0; i < o.label.size(); ++i) std::cout << (i ? "," : "") << o.label[i];
    std::cout << "]  p=" << o.probability << "  F=" << o.fidelity << '\n';
  }
  std::cout << "total probability " << run.total_probability << ", min fidelity "
            << run.min_fidelity << '\n';
  return run.min_fidelity >= 1.0 - g.tol && std::abs(run.total_probability - 1.0) <= g.tol
             ? kOk
             : kFailed;
}

int sdc_cmd(const std::string& path, const std::string& sender, const Globals& g) {
  const PureState s = state_from_json(load_json(path));
  const Partition cut = cut_for(s, sender);
  const SdcCodebook book = build_sdc_codebook(s, cut.sender());
  std::size_t decoded = 0;
  for (std::size_t m = 0; m < book.size(); ++m) {
    const SdcDecode d = simulate_sdc(s, book, m);
    if (d.decoded == m && d.probability >= 1.0 - g.tol) ++decoded;
  }
  std::cout << "sender {" << format_qubit_list(cut.sender()) << "}: " << book.size()
            << " messages, " << decoded << " decoded, max overlap " << book.max_overlap() << '\n';
  for (const auto& e : book.encodings) {
    std::cout << "  ";
    for (int d : e) std::cout << d;
    std::cout << '\n';
  }
  return decoded == book.size() ? kOk : kFailed;
}

int tmes_cmd(const std::string& path) {
  const PureState s = state_from_json(load_json(path));
  const TmesVerdict v = is_tmes(s);
  std::cout << (v.is_tmes ? "TMES" : "not a TMES") << '\n'
            << "teleport " << v.teleport_qubits << " of " << v.teleport_threshold << " qubit(s)";
  if (v.witnessing_partition) std::cout << " across " << v.witnessing_partition->str();
  std::cout << "\ndense coding " << v.sdc_messages << " of " << v.sdc_threshold << " messages";
  if (v.sdc_sender) std::cout << " from {" << format_qubit_list(*v.sdc_sender) << "}";
  std::cout << '\n';
  return kOk;
}

int obstruct_cmd(const std::string& src, const std::string& dst, const std::string& subset) {
  const PureState a = state_from_json(load_json(src));
  const PureState b = state_from_json(load_json(dst));
  const auto rep = conversion_obstruction(a, b, parse_qubit_list(subset));
  std::cout << rep.cuts_checked << " cut(s) checked for subset {"
            << format_qubit_list(rep.acting_subset) << "}\n";
  if (!rep.obstructed()) {
    std::cout << "no obstruction\n";
    return kOk;
  }
  for (const auto& v : rep.violated_cuts) {
    std::cout << "  cut {" << format_qubit_list(v.side) << "}: " << spectrum_str(v.source)
              << " vs " << spectrum_str(v.target) << '\n';
  }
  std::cout << "obstructed\n";
  return kOk;
}

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string id;
  while (std::getline(ss, id, ',')) {
    if (!id.empty()) out.push_back(id);
  }
  return out;
}

int verify_cmd(const std::string& claims, const std::string& report, const Globals& g) {
  SuiteConfig config;
  config.tolerance = g.tol;
  config.seed = g.seed;
  config.claims = split_ids(claims);
  const auto reports = run_claim_suite(config);
  std::cout << render_table(reports);
  if (!report.empty()) save_json(report, report_document(reports, config, utc_now()));
  return suite_passed(reports) ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Task-oriented maximally entangled states"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--tol", g.tol, "Tolerance for fidelities and orthogonality")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Random seed");

  std::function<int()> action;

  auto* state = app.add_subcommand("state", "Build or inspect a state");
  state->require_subcommand(1);
  std::string spec, out, file;
  std::vector<std::string> ops;
  auto* build = state->add_subcommand("build", "Build a catalog state");
  build->add_option("spec", spec, "e.g. ghz:4, bell_product:2, chi, w:2")->required();
  build->add_option("--apply", ops, "Apply op@targets, e.g. cnot@1,3 (repeatable)");
  build->add_option("--out", out, "Output file (default stdout)");
  build->callback([&] { action = [&] { return state_build(spec, ops, out); }; });
  auto* show = state->add_subcommand("show", "Print a state file");
  show->add_option("file", file)->required();
  show->callback([&] { action = [&] { return state_show(file); }; });

  int level = 1;
  auto* op = app.add_subcommand("op", "Operator families");
  op->require_subcommand(1);
  auto* gen = op->add_subcommand("gen", "Generate the level-d unitary family");
  gen->add_option("--level", level)->required()->check(CLI::Range(1, 4));
  gen->add_option("--out", out);
  gen->callback([&] { action = [&] { emit(to_json(operator_level(level)), out); return kOk; }; });

  std::string sender;
  auto* cap = app.add_subcommand("capacity", "Teleport and dense coding capacity of a cut");
  cap->add_option("--state", file)->required();
  cap->add_option("--sender", sender, "Sender qubits (default: odd qubits)");
  cap->callback([&] { action = [&] { return capacity_cmd(file, sender); }; });

  int payload = 1;
  auto* tel = app.add_subcommand("teleport", "Simulate teleportation of a random payload");
  tel->add_option("--resource", file)->required();
  tel->add_option("--sender", sender);
  tel->add_option("--payload-qubits", payload)->check(CLI::PositiveNumber);
  tel->callback([&] { action = [&] { return teleport_cmd(file, sender, payload, g); }; });

  auto* sdc = app.add_subcommand("sdc", "Build and check a dense coding codebook");
  sdc->add_option("--state", file)->required();
  sdc->add_option("--sender", sender);
  sdc->callback([&] { action = [&] { return sdc_cmd(file, sender, g); }; });

  auto* tm = app.add_subcommand("tmes", "Decide task-oriented maximality");
  tm->add_option("--state", file)->required();
  tm->callback([&] { action = [&] { return tmes_cmd(file); }; });

  std::string target, subset;
  auto* obs = app.add_subcommand("obstruct", "Spectral test for a local conversion");
  obs->add_option("--source", file)->required();
  obs->add_option("--target", target)->required();
  obs->add_option("--subset", subset)->required();
  obs->callback([&] { action = [&] { return obstruct_cmd(file, target, subset); }; });

  std::string claims, report;
  auto* ver = app.add_subcommand("verify", "Run the claim suite");
  ver->add_option("--claims", claims, "Comma separated claim ids (default all)");
  ver->add_option("--report", report, "Write a JSON report");
  ver->callback([&] { action = [&] { return verify_cmd(claims, report, g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
