// Copyright 2026 The qpsim Authors
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

// Command-line surface: build/verify phase spaces, decompose states, run
// simulations, emit tables.
//
// Exit codes: 0 success, 1 usage/parse errors, 2 infeasible or negative
// verdicts (budget exhausted, decomposition infeasible, ordering violated).
//
// Flag values resolve as: command line > QPSIM_* environment variable >
// default.

#include <omp.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qpsim/decompose.hpp"
#include "qpsim/exact.hpp"
#include "qpsim/phasespace.hpp"
#include "qpsim/simulate.hpp"

using namespace qpsim;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNegative = 2;

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<PhasePointOperator> load_set(const std::string &selector, uint32_t n,
                                          uint32_t cap_stabilizers = 3) {
  if (selector == "stabilizer") {
    std::vector<PhasePointOperator> ops;
    for (const auto &s : stabilizer_family(n, cap_stabilizers)) ops.push_back(stabilizer_operator(s));
    return ops;
  }
  if (selector == "cnc") return build_phase_space(n, {.stabilizers = true, .cnc_maximal = true});
  if (selector == "linegraph") {
    if (n >= 3) {
      // product family: single-qubit members with stabilizer tails
      std::vector<PhasePointOperator> ops;
      auto heads = build_phase_space(1, {});
      for (const auto &head : heads)
        for (const auto &tail : stabilizer_family(n - 1)) ops.push_back(tensor_with_tail(head, tail));
      for (const auto &s : stabilizer_family(n)) ops.push_back(stabilizer_operator(s));
      return ops;
    }
    PhaseSpaceConfig cfg;
    cfg.majorana_pairs = n == 2;
    return build_phase_space(n, cfg);
  }
  if (selector.rfind("file:", 0) == 0) {
    std::vector<PhasePointOperator> ops;
    std::istringstream is(read_file(selector.substr(5)));
    std::string block, line;
    auto flush = [&]() {
      if (block.empty()) return;
      ops.push_back(PhasePointOperator::from_text(block));
      block.clear();
    };
    while (std::getline(is, line)) {
      if (line.rfind("n=", 0) == 0) flush();
      if (!line.empty()) block += line + "\n";
    }
    flush();
    for (const auto &op : ops)
      if (op.n != n) throw CLI::ValidationError("operator file qubit count mismatch");
    return ops;
  }
  throw CLI::ValidationError("unknown set selector: " + selector);
}

PauliVector state_from_args(const std::string &state_names, const std::string &state_file,
                            uint32_t *n_out) {
  if (!state_file.empty()) {
    auto op = PhasePointOperator::from_text(read_file(state_file));
    *n_out = op.n;
    return PauliVector::from_operator(op);
  }
  std::vector<std::string> names;
  std::istringstream is(state_names);
  std::string tok;
  while (std::getline(is, tok, ',')) names.push_back(tok);
  auto rho = dense_state(names);
  *n_out = rho.num_qubits();
  auto pc = pauli_coefficients(rho);
  if (pc.rational) {
    std::vector<Rational> rx;
    for (const auto &v : pc.exact_values) rx.push_back(v.u);
    return PauliVector::from_exact(*n_out, std::move(rx));
  }
  return PauliVector::from_float(*n_out, pc.values);
}

int cmd_table_fnm(uint32_t n_max, const std::string &format) {
  std::ostream &os = std::cout;
  if (format == "records") {
    for (uint32_t n = 1; n <= n_max; ++n) {
      for (uint32_t m = 1; m <= n; ++m)
        os << "f n=" << n << " m=" << m << " " << f_counting(n, m).str() << "\n";
      os << "bound n=" << n << " " << ((BigInt(1) << n) - 1).str() << "\n";
    }
    return kExitOk;
  }
  os << "n";
  for (uint32_t m = 1; m <= n_max; ++m) os << "\tm=" << m;
  os << "\t2^n-1\n";
  for (uint32_t n = 1; n <= n_max; ++n) {
    os << n;
    for (uint32_t m = 1; m <= n_max; ++m) {
      os << "\t";
      if (m <= n) os << f_counting(n, m).str();
    }
    os << "\t" << ((BigInt(1) << n) - 1).str() << "\n";
  }
  return kExitOk;
}

int cmd_verify_vertices(uint32_t n, uint64_t budget, uint64_t seed, int64_t eta_override,
                        const std::string &format) {
  std::ostream &os = std::cout;
  (void)format;
  if (n < 1 || n > 3) {
    std::cerr << "verify-vertices supports n in {1,2,3}\n";
    return kExitUsage;
  }
  if (eta_override >= 0) {
    MajoranaPairLabel label{.n = n, .majoranas = jordan_wigner_majoranas(2 * n + 1),
                        .eta = (uint64_t)eta_override};
    auto op = make_majorana_pair_operator(label);
    auto v = vertex_check(op);
    os << "eta " << eta_override << "\n";
    os << "in_lambda " << v.in_lambda << "\n";
    os << "min_inner_product " << rational_str(lambda_membership(op).min_inner_product) << "\n";
    os << "orthogonal_stabilizers " << v.orthogonal_count << "\n";
    os << "rank " << v.rank << " / " << v.required_rank << "\n";
    os << "vertex " << (v.is_vertex ? 1 : 0) << "\n";
    return v.is_vertex ? kExitOk : kExitNegative;
  }
  bool exhaustive = n <= 2;
  auto res = find_vertex_signs(n, exhaustive, budget, seed);
  os << "n " << n << "\n";
  os << "mode " << (exhaustive ? "exhaustive" : "randomized") << "\n";
  os << "tried " << res.tried << "\n";
  if (exhaustive) os << "vertex_count " << res.vertex_count << "\n";
  if (!res.found) {
    os << "found 0\n";
    std::cerr << "sign-search budget exhausted\n";
    return kExitNegative;
  }
  auto op = make_majorana_pair_operator(res.label);
  auto mem = lambda_membership(op);
  auto v = vertex_check(op);
  os << "found 1\n";
  os << "eta " << res.label.eta << "\n";
  os << "min_inner_product " << rational_str(mem.min_inner_product) << "\n";
  os << "orthogonal_stabilizers " << v.orthogonal_count << "\n";
  os << "rank " << v.rank << " / " << v.required_rank << "\n";
  os << "vertex " << (v.is_vertex ? 1 : 0) << "\n";
  return kExitOk;
}

int cmd_simulate(const std::string &circuit_file, const std::string &selector, uint64_t shots,
                 uint64_t seed, bool oracle_mode, bool report_tv, bool transcripts,
                 const std::string &quasi_target, const std::string &format,
                 uint32_t cap_stabilizers) {
  Circuit circuit = Circuit::parse(read_file(circuit_file));
  auto rho_dense = dense_state_of_circuit(circuit);
  std::ostream &os = std::cout;

  if (oracle_mode) {
    auto dist = exact_distribution(rho_dense, circuit);
    os << "# oracle exact distribution\n";
    for (const auto &b : dist) {
      os << transcript_key(b.transcript) << "\t";
      if (b.exact)
        os << rational_str(b.exact_probability.u) << (b.exact_probability.v != 0 ? "+sqrt2*" + rational_str(b.exact_probability.v) : "");
      else
        os << b.probability;
      os << "\t" << b.probability << "\n";
    }
    return kExitOk;
  }

  auto pc = pauli_coefficients(rho_dense);
  PauliVector rho = pc.rational
                        ? [&] {
                            std::vector<Rational> rx;
                            for (const auto &v : pc.exact_values) rx.push_back(v.u);
                            return PauliVector::from_exact(circuit.n, std::move(rx));
                          }()
                        : PauliVector::from_float(circuit.n, pc.values);
  auto ops = load_set(selector, circuit.n, cap_stabilizers);

  if (!quasi_target.empty()) {
    auto rb = robustness(rho, ops);
    if (!rb.feasible) {
      std::cerr << "state outside the span of the generating set\n";
      return kExitNegative;
    }
    std::vector<double> w(ops.size(), 0.0);
    for (const auto &[idx, weight] : rb.weights) w[idx] = weight;
    Transcript target;
    std::istringstream ts(quasi_target);
    std::string pair;
    while (std::getline(ts, pair, ',')) {
      auto eq = pair.find('=');
      if (eq == std::string::npos) throw CLI::ValidationError("bad --target: " + quasi_target);
      target.emplace_back(pair.substr(0, eq), std::stoi(pair.substr(eq + 1)));
    }
    auto est = quasi_estimate(ops, w, circuit, target, shots, seed);
    os << "# seed=" << seed << " shots=" << shots << "\n";
    os << "one_norm\t" << est.one_norm << "\n";
    os << "estimate\t" << est.estimate << "\n";
    os << "std_error\t" << est.std_error << "\n";
    return kExitOk;
  }

  auto dec = decompose_nonnegative(rho, ops);
  if (!dec.feasible) {
    std::cerr << "no nonnegative decomposition over set '" << selector
              << "'; use --quasi with a target outcome\n";
    return kExitNegative;
  }
  std::vector<PhasePointOperator> used;
  std::vector<Rational> weights;
  for (size_t i = 0; i < dec.weights.size(); ++i) {
    used.push_back(ops[dec.weights[i].first]);
    weights.push_back(dec.exact ? dec.weights_exact[i].second : Rational(dec.weights[i].second));
  }
  os << "# seed=" << seed << " shots=" << shots << " set=" << selector << "\n";
  if (transcripts) {
    for (uint64_t i = 0; i < shots; ++i)
      os << transcript_key(simulate_run(used, weights, circuit, seed, i)) << "\n";
    return kExitOk;
  }
  auto est = estimate_distribution(used, weights, circuit, shots, seed);
  if (format == "records") {
    for (const auto &[k, c] : est.counts)
      os << "count " << k << " " << c << " freq " << est.frequency.at(k) << " stderr "
         << est.std_error.at(k) << "\n";
  } else {
    os << "transcript\tcount\tfrequency\tstd_error\n";
    for (const auto &[k, c] : est.counts)
      os << k << "\t" << c << "\t" << est.frequency.at(k) << "\t" << est.std_error.at(k) << "\n";
  }
  if (report_tv) {
    auto dist = exact_distribution(rho_dense, circuit);
    os << "tv_distance\t" << total_variation(est, dist) << "\n";
  }
  return kExitOk;
}

int cmd_robustness(const std::string &state_names, const std::string &state_file,
                   const std::vector<std::string> &selectors, const std::string &format) {
  uint32_t n = 0;
  auto rho = state_from_args(state_names, state_file, &n);
  std::ostream &os = std::cout;
  std::vector<double> values;
  for (const auto &sel : selectors) {
    auto ops = load_set(sel, n);
    auto r = robustness(rho, ops);
    if (!r.feasible) {
      std::cerr << "state outside the span of set '" << sel << "'\n";
      return kExitNegative;
    }
    values.push_back(r.one_norm);
    if (format == "records") {
      os << "set " << sel << "\n" << r.to_records(ops);
    } else {
      os << sel << "\t";
      if (r.exact)
        os << rational_str(r.one_norm_exact);
      else
        os << r.one_norm;
      os << "\tcertified=" << (r.dual_certified ? 1 : 0) << "\tsupport=" << r.weights.size()
         << "\n";
    }
  }
  // ordering check across selectors, in the order given
  for (size_t i = 0; i + 1 < values.size(); ++i)
    if (values[i] > values[i + 1] + 1e-6) {
      std::cerr << "robustness ordering violated between '" << selectors[i] << "' and '"
                << selectors[i + 1] << "'\n";
      return kExitNegative;
    }
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"phase-space simulator for magic-state circuits"};
  app.require_subcommand(1);

  uint32_t n_max = 5;
  uint32_t n = 2;
  uint64_t shots = 100000, seed = 1, budget = 2000;
  uint32_t cap_stabilizers = 3;
  int threads = 0;
  int64_t eta_override = -1;
  std::string format = "tsv", selector = "linegraph", circuit_file, state_names = "H",
              state_file, quasi_target;
  std::vector<std::string> selectors;
  bool oracle_mode = false, report_tv = false, transcripts = false;

  app.add_option("--threads", threads, "worker pool size (0 = library default)")
      ->envname("QPSIM_THREADS");

  auto *t = app.add_subcommand("table-fnm", "emit the f(n,m) table with the 2^n-1 column");
  t->add_option("--n-max", n_max, "largest n")->envname("QPSIM_N_MAX")->check(CLI::Range(1, 12));
  t->add_option("--format", format, "tsv|records")->envname("QPSIM_FORMAT");

  auto *v = app.add_subcommand("verify-vertices", "sign searches and vertex rank verdicts");
  v->add_option("--n", n, "qubit count (1,2 exhaustive; 3 randomized)")->envname("QPSIM_N");
  v->add_option("--budget", budget, "randomized search budget")->envname("QPSIM_BUDGET");
  v->add_option("--seed", seed, "master seed")->envname("QPSIM_SEED");
  v->add_option("--eta", eta_override, "check one sign assignment instead of searching");
  v->add_option("--format", format, "tsv|records")->envname("QPSIM_FORMAT");

  auto *s = app.add_subcommand("simulate", "sampling simulation of a circuit file");
  s->add_option("--circuit", circuit_file, "circuit file")->required();
  s->add_option("--shots", shots, "number of runs")->envname("QPSIM_SHOTS");
  s->add_option("--seed", seed, "master seed")->envname("QPSIM_SEED");
  s->add_option("--set", selector, "stabilizer|cnc|linegraph|file:<path>")->envname("QPSIM_SET");
  s->add_option("--cap-stabilizers", cap_stabilizers, "stabilizer enumeration cap")
      ->envname("QPSIM_CAP_STABILIZERS");
  s->add_flag("--oracle", oracle_mode, "emit the exact distribution instead of sampling");
  s->add_flag("--report-tv", report_tv, "append the TV distance against the oracle");
  s->add_flag("--transcripts", transcripts, "one transcript per line instead of counts");
  s->add_option("--quasi", quasi_target, "target outcome string for quasiprobability estimation");
  s->add_option("--format", format, "tsv|records")->envname("QPSIM_FORMAT");

  auto *r = app.add_subcommand("robustness", "LP robustness over generating sets");
  r->add_option("--state", state_names, "comma-separated product of named states");
  r->add_option("--state-file", state_file, "operator-format state file");
  r->add_option("--set", selectors, "one or more selectors; ordering checked across them")
      ->envname("QPSIM_SET");
  r->add_option("--format", format, "tsv|records")->envname("QPSIM_FORMAT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (threads > 0) omp_set_num_threads(threads);

  try {
    if (t->parsed()) return cmd_table_fnm(n_max, format);
    if (v->parsed()) return cmd_verify_vertices(n, budget, seed, eta_override, format);
    if (s->parsed())
      return cmd_simulate(circuit_file, selector, shots, seed, oracle_mode, report_tv,
                          transcripts, quasi_target, format, cap_stabilizers);
    if (r->parsed()) {
      if (selectors.empty()) selectors = {"stabilizer"};
      return cmd_robustness(state_names, state_file, selectors, format);
    }
  } catch (const CLI::ValidationError &e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument &e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << e.what() << "\n";
    return kExitNegative;
  }
  return kExitUsage;
}
