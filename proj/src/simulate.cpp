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

#include "qpsim/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qpsim/graphs.hpp"

namespace qpsim {

std::vector<std::string> Circuit::measurement_labels() const {
  std::vector<std::string> out;
  for (const auto &el : elements)
    if (std::holds_alternative<Measurement>(el)) out.push_back(std::get<Measurement>(el).label);
  return out;
}

void Circuit::validate() const {
  if (n == 0 || n > 32) throw std::invalid_argument("circuit qubit count out of range");
  std::set<uint32_t> covered;
  for (const auto &[name, qs] : state_spec)
    for (uint32_t q : qs) {
      if (q >= n) throw std::invalid_argument("state qubit out of range");
      if (!covered.insert(q).second) throw std::invalid_argument("duplicate state assignment");
    }
  std::set<std::string> labels;
  for (const auto &el : elements) {
    if (std::holds_alternative<Gate>(el)) {
      const auto &g = std::get<Gate>(el);
      CliffordTableau::from_gate(g.name, n, g.qubits);  // validates
      if (!g.condition.empty() && !labels.count(g.condition))
        throw std::invalid_argument("condition refers to unknown or later label: " + g.condition);
    } else {
      const auto &m = std::get<Measurement>(el);
      if (m.target.pt.n != n) throw std::invalid_argument("measurement qubit count mismatch");
      if (!m.target.hermitian()) throw std::invalid_argument("measurement target must be Hermitian");
      if (m.target.pt.is_zero()) throw std::invalid_argument("measurement target must be nonidentity");
      if (m.label.empty() || !labels.insert(m.label).second)
        throw std::invalid_argument("measurement labels must be unique and nonempty");
    }
  }
}

Circuit Circuit::parse(const std::string &text) {
  Circuit c;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string &msg) {
    throw std::invalid_argument("circuit line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "qubits") {
      if (!(ls >> c.n)) fail("qubits needs a count");
    } else if (word == "state") {
      std::string name;
      if (!(ls >> name)) fail("state needs a name");
      std::vector<uint32_t> qs;
      uint32_t q;
      while (ls >> q) qs.push_back(q);
      if (qs.empty()) fail("state needs qubits");
      c.state_spec.emplace_back(name, qs);
    } else if (word == "gate") {
      Gate g;
      if (!(ls >> g.name)) fail("gate needs a name");
      std::string tok;
      while (ls >> tok) {
        if (tok == "if") {
          if (!(ls >> g.condition)) fail("if needs a label");
          break;
        }
        try {
          g.qubits.push_back((uint32_t)std::stoul(tok));
        } catch (...) {
          fail("bad gate qubit: " + tok);
        }
      }
      c.elements.emplace_back(std::move(g));
    } else if (word == "measure") {
      std::string pauli, arrow, label;
      if (!(ls >> pauli >> arrow >> label) || arrow != "->") fail("measure <pauli> -> <label>");
      Measurement m;
      try {
        m.target = parse_pauli(pauli);
      } catch (const std::exception &e) {
        fail(e.what());
      }
      m.label = label;
      c.elements.emplace_back(std::move(m));
    } else {
      fail("unknown directive: " + word);
    }
  }
  c.validate();
  return c;
}

std::string Circuit::to_text() const {
  std::ostringstream os;
  os << "qubits " << n << "\n";
  for (const auto &[name, qs] : state_spec) {
    os << "state " << name;
    for (uint32_t q : qs) os << " " << q;
    os << "\n";
  }
  for (const auto &el : elements) {
    if (std::holds_alternative<Gate>(el)) {
      const auto &g = std::get<Gate>(el);
      os << "gate " << g.name;
      for (uint32_t q : g.qubits) os << " " << q;
      if (!g.condition.empty()) os << " if " << g.condition;
      os << "\n";
    } else {
      const auto &m = std::get<Measurement>(el);
      os << "measure " << to_string(m.target) << " -> " << m.label << "\n";
    }
  }
  return os.str();
}

CanonicalState::CanonicalState(uint32_t n, IsotropicSubspace record,
                               std::vector<std::pair<PauliPoint, Rational>> core)
    : n_(n), record_(std::move(record)), core_(std::move(core)) {
  for (const auto &[p, c] : core_)
    if (!record_.commutes_with(p))
      throw std::invalid_argument("core point anticommutes with the record");
  canonicalize();
}

CanonicalState CanonicalState::from_operator(const PhasePointOperator &op) {
  if (op.constructive) {
    const auto &cf = *op.constructive;
    IsotropicSubspace rec(op.n);
    for (const auto &[p, s] : cf.tail) {
      PhasedPauli img = cf.g.apply(PhasedPauli(s ? 2 : 0, p));
      rec.add(img.pt, img.sign_bit());
    }
    std::vector<std::pair<PauliPoint, Rational>> core;
    for (const auto &[p, c] : cf.core) {
      PhasedPauli img = cf.g.apply(PhasedPauli(0, p));
      core.emplace_back(img.pt, img.sign_bit() ? -c : c);
    }
    return CanonicalState(op.n, std::move(rec), std::move(core));
  }
  return CanonicalState(op.n, IsotropicSubspace(op.n), op.terms);
}

void CanonicalState::canonicalize() {
  std::map<uint64_t, std::pair<PauliPoint, Rational>> acc;
  for (const auto &[p, c] : core_) {
    auto [rep, sign] = record_.reduce(p);
    auto &slot = acc[rep.key()];
    slot.first = rep;
    slot.second += sign ? -c : c;
  }
  auto it0 = acc.find(PauliPoint::zero(n_).key());
  if (it0 == acc.end() || it0->second.second == 0)
    throw std::logic_error("canonical state lost its identity component");
  Rational c0 = it0->second.second;
  core_.clear();
  for (auto &[key, pc] : acc) {
    if (pc.second == 0) continue;
    core_.emplace_back(pc.first, pc.second / c0);
  }
  std::sort(core_.begin(), core_.end(),
            [](const auto &l, const auto &r) { return l.first < r.first; });
}

Rational CanonicalState::coefficient_of(const PauliPoint &p) const {
  if (p.is_zero()) return Rational(1);
  if (!record_.commutes_with(p)) return Rational(0);
  auto [rep, sign] = record_.reduce(p);
  auto it = std::lower_bound(core_.begin(), core_.end(), rep,
                             [](const auto &t, const PauliPoint &q) { return t.first < q; });
  if (it == core_.end() || !(it->first == rep)) return Rational(0);
  return sign ? -it->second : it->second;
}

std::vector<std::pair<PauliPoint, Rational>> CanonicalState::expanded_terms() const {
  std::vector<std::pair<PauliPoint, Rational>> out;
  for (const auto &[t, s] : record_.span_elements())
    for (const auto &[j, c] : core_) {
      int sign = (s + beta(t, j)) & 1;
      out.emplace_back(t ^ j, sign ? -c : c);
    }
  std::sort(out.begin(), out.end(), [](const auto &l, const auto &r) { return l.first < r.first; });
  return out;
}

void CanonicalState::apply_clifford(const CliffordTableau &g) {
  if (g.num_qubits() != n_) throw std::invalid_argument("tableau qubit count mismatch");
  IsotropicSubspace rec(n_);
  for (const auto &[b, r] : record_.rows()) {
    PhasedPauli img = g.apply(PhasedPauli(r ? 2 : 0, b));
    rec.add(img.pt, img.sign_bit());
  }
  std::vector<std::pair<PauliPoint, Rational>> core;
  core.reserve(core_.size());
  for (const auto &[j, c] : core_) {
    PhasedPauli img = g.apply(PhasedPauli(0, j));
    core.emplace_back(img.pt, img.sign_bit() ? -c : c);
  }
  record_ = std::move(rec);
  core_ = std::move(core);
  canonicalize();
}

Rational CanonicalState::outcome_probability(const PhasedPauli &target, int s) const {
  if (!target.hermitian()) throw std::invalid_argument("measurement target must be Hermitian");
  if (target.pt.is_zero()) throw std::invalid_argument("measurement target must be nonidentity");
  int eff = (s ^ target.sign_bit()) & 1;
  Rational x = coefficient_of(target.pt);
  return (Rational(1) + (eff ? -x : x)) / 2;
}

Rational CanonicalState::measure_update(const PhasedPauli &target, int s) {
  Rational prob = outcome_probability(target, s);
  if (prob == 0) throw std::runtime_error("probability-zero outcome forced");
  int eff = (s ^ target.sign_bit()) & 1;
  const PauliPoint a = target.pt;
  if (record_.in_span(a)) return prob;  // consistency validated by prob != 0

  std::vector<size_t> anti;
  for (size_t i = 0; i < record_.rows().size(); ++i)
    if (symplectic(a, record_.rows()[i].first) == 1) anti.push_back(i);

  if (!anti.empty()) {
    // basis surgery: one anticommuting row absorbs the others
    auto rows = record_.rows();
    auto [b0, r0] = rows[anti[0]];
    IsotropicSubspace rec(n_);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == anti[0]) continue;
      auto [b, rb] = rows[i];
      if (symplectic(a, b) == 1) {
        PauliPoint nb = b ^ b0;
        rec.add(nb, (rb + r0 + beta(nb, b0)) & 1);
      } else {
        rec.add(b, rb);
      }
    }
    std::vector<std::pair<PauliPoint, Rational>> core;
    core.reserve(core_.size());
    for (const auto &[j, c] : core_) {
      if (symplectic(a, j) == 0) {
        core.emplace_back(j, c);
      } else {
        PauliPoint jj = b0 ^ j;
        int sgn = (r0 + beta(b0, j)) & 1;
        core.emplace_back(jj, sgn ? -c : c);
      }
    }
    rec.add(a, eff);
    record_ = std::move(rec);
    core_ = std::move(core);
    canonicalize();
    return prob;
  }

  // a commutes with the record: drop anticommuting core terms, adjoin (a, s)
  std::vector<std::pair<PauliPoint, Rational>> core;
  core.reserve(core_.size());
  for (const auto &[j, c] : core_)
    if (symplectic(a, j) == 0) core.emplace_back(j, c);
  record_.add(a, eff);
  core_ = std::move(core);
  canonicalize();
  return prob;
}

bool CanonicalState::core_is_line_graph() const {
  std::vector<PauliPoint> pts;
  for (const auto &[p, c] : core_)
    if (!p.is_zero()) pts.push_back(p);
  if (pts.empty()) return true;
  return is_line_graph_up_to_twins(frustration_graph(pts));
}

std::string transcript_key(const Transcript &t) {
  std::ostringstream os;
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) os << ",";
    os << t[i].first << "=" << t[i].second;
  }
  return os.str();
}

Transcript simulate_run(const std::vector<PhasePointOperator> &ops,
                        const std::vector<Rational> &weights, const Circuit &circuit,
                        uint64_t master_seed, uint64_t shot_index) {
  if (ops.size() != weights.size() || ops.empty())
    throw std::invalid_argument("decomposition size mismatch");
  StreamRng rng(master_seed, shot_index);
  size_t idx = rng.pick(weights);
  CanonicalState state = CanonicalState::from_operator(ops[idx]);
  Transcript transcript;
  std::map<std::string, int> bits;
  for (const auto &el : circuit.elements) {
    if (std::holds_alternative<Circuit::Gate>(el)) {
      const auto &g = std::get<Circuit::Gate>(el);
      if (!g.condition.empty() && bits.at(g.condition) == 0) continue;
      state.apply_clifford(CliffordTableau::from_gate(g.name, circuit.n, g.qubits));
    } else {
      const auto &m = std::get<Circuit::Measurement>(el);
      Rational p1 = state.outcome_probability(m.target, 1);
      int s = rng.bernoulli(p1) ? 1 : 0;
      state.measure_update(m.target, s);
      transcript.emplace_back(m.label, s);
      bits[m.label] = s;
    }
  }
  return transcript;
}

namespace {
DistributionEstimate aggregate(std::vector<std::string> keys) {
  DistributionEstimate est;
  est.shots = keys.size();
  for (auto &k : keys) ++est.counts[k];
  for (const auto &[k, c] : est.counts) {
    double f = double(c) / double(est.shots);
    est.frequency[k] = f;
    est.std_error[k] = std::sqrt(f * (1 - f) / double(est.shots));
  }
  return est;
}
}  // namespace

DistributionEstimate estimate_distribution_serial(const std::vector<PhasePointOperator> &ops,
                                                  const std::vector<Rational> &weights,
                                                  const Circuit &circuit, uint64_t shots,
                                                  uint64_t master_seed) {
  std::vector<std::string> keys(shots);
  for (uint64_t i = 0; i < shots; ++i)
    keys[i] = transcript_key(simulate_run(ops, weights, circuit, master_seed, i));
  return aggregate(std::move(keys));
}

DistributionEstimate estimate_distribution(const std::vector<PhasePointOperator> &ops,
                                           const std::vector<Rational> &weights,
                                           const Circuit &circuit, uint64_t shots,
                                           uint64_t master_seed) {
  std::vector<std::string> keys(shots);
#pragma omp parallel for schedule(dynamic, 256)
  for (long long i = 0; i < (long long)shots; ++i)
    keys[i] = transcript_key(simulate_run(ops, weights, circuit, master_seed, (uint64_t)i));
  return aggregate(std::move(keys));
}

QuasiEstimate quasi_estimate(const std::vector<PhasePointOperator> &ops,
                             const std::vector<double> &signed_weights, const Circuit &circuit,
                             const Transcript &target_outcome, uint64_t shots,
                             uint64_t master_seed) {
  if (ops.size() != signed_weights.size() || ops.empty())
    throw std::invalid_argument("decomposition size mismatch");
  std::vector<double> absw(signed_weights.size());
  double norm = 0;
  for (size_t i = 0; i < signed_weights.size(); ++i) {
    absw[i] = std::abs(signed_weights[i]);
    norm += absw[i];
  }
  std::map<std::string, int> want;
  for (const auto &[label, bit] : target_outcome) want[label] = bit;

  double sum = 0, sumsq = 0;
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : sum, sumsq)
  for (long long i = 0; i < (long long)shots; ++i) {
    StreamRng rng(master_seed, (uint64_t)i);
    size_t idx = rng.pick(absw);
    CanonicalState state = CanonicalState::from_operator(ops[idx]);
    std::map<std::string, int> bits;
    for (const auto &el : circuit.elements) {
      if (std::holds_alternative<Circuit::Gate>(el)) {
        const auto &g = std::get<Circuit::Gate>(el);
        if (!g.condition.empty() && bits.at(g.condition) == 0) continue;
        state.apply_clifford(CliffordTableau::from_gate(g.name, circuit.n, g.qubits));
      } else {
        const auto &m = std::get<Circuit::Measurement>(el);
        Rational p1 = state.outcome_probability(m.target, 1);
        int s = rng.bernoulli(p1) ? 1 : 0;
        state.measure_update(m.target, s);
        bits[m.label] = s;
      }
    }
    bool match = true;
    for (const auto &[label, bit] : want) {
      auto it = bits.find(label);
      if (it == bits.end() || it->second != bit) {
        match = false;
        break;
      }
    }
    double v = match ? (signed_weights[idx] < 0 ? -norm : norm) : 0.0;
    sum += v;
    sumsq += v * v;
  }
  QuasiEstimate est;
  est.shots = shots;
  est.one_norm = norm;
  est.estimate = sum / double(shots);
  double var = std::max(0.0, sumsq / double(shots) - est.estimate * est.estimate);
  est.std_error = std::sqrt(var / double(shots));
  return est;
}

}  // namespace qpsim
