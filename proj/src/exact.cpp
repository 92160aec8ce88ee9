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

#include "qpsim/exact.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace qpsim {

namespace {

void branch_walk(const DenseOperator &rho, const Circuit &circuit, size_t pos,
                 Transcript &transcript, std::map<std::string, int> &bits,
                 std::vector<ExactBranch> &out) {
  if (pos == circuit.elements.size()) {
    ExactBranch b;
    b.transcript = transcript;
    b.exact = rho.is_exact();
    if (b.exact) {
      b.exact_probability = rho.real_trace();
      b.probability = b.exact_probability.to_double();
    } else {
      b.probability = rho.trace_float().real();
    }
    out.push_back(std::move(b));
    return;
  }
  const auto &el = circuit.elements[pos];
  if (std::holds_alternative<Circuit::Gate>(el)) {
    const auto &g = std::get<Circuit::Gate>(el);
    if (!g.condition.empty() && bits.at(g.condition) == 0) {
      branch_walk(rho, circuit, pos + 1, transcript, bits, out);
      return;
    }
    DenseOperator u = dense_gate(g.name, circuit.n, g.qubits);
    branch_walk(conjugate(u, rho), circuit, pos + 1, transcript, bits, out);
    return;
  }
  const auto &m = std::get<Circuit::Measurement>(el);
  DenseOperator t = dense_pauli(PhasedPauli(0, m.target.pt));
  DenseOperator id = DenseOperator::identity(circuit.n);
  for (int s = 0; s < 2; ++s) {
    int eff = (s ^ m.target.sign_bit()) & 1;
    DenseOperator pi = (eff ? id - t : id + t).scaled(Rational(1, 2));
    DenseOperator post = pi * rho * pi;
    bool dead;
    if (post.is_exact())
      dead = post.real_trace() == QSqrt2{0, 0};
    else
      dead = std::abs(post.trace_float().real()) < 1e-14;
    if (dead) continue;
    transcript.emplace_back(m.label, s);
    bits[m.label] = s;
    branch_walk(post, circuit, pos + 1, transcript, bits, out);
    bits.erase(m.label);
    transcript.pop_back();
  }
}

}  // namespace

std::vector<ExactBranch> exact_distribution(const DenseOperator &rho, const Circuit &circuit) {
  if (circuit.n > 8) throw std::invalid_argument("exact_distribution capped at n = 8");
  size_t meas = circuit.measurement_labels().size();
  if (meas > 20) throw std::invalid_argument("exact_distribution capped at 20 measurements");
  if (rho.num_qubits() != circuit.n) throw std::invalid_argument("state/circuit size mismatch");
  std::vector<ExactBranch> out;
  Transcript transcript;
  std::map<std::string, int> bits;
  branch_walk(rho, circuit, 0, transcript, bits, out);
  return out;
}

DenseOperator dense_state_of_circuit(const Circuit &circuit) {
  std::vector<std::string> names(circuit.n, "0");
  for (const auto &[name, qs] : circuit.state_spec)
    for (uint32_t q : qs) names[q] = name;
  return dense_state(names);
}

DenseOperator reconstruct_state(const CanonicalState &state) {
  return reconstruct_terms(state.num_qubits(), state.expanded_terms());
}

DenseOperator reconstruct_operator(const PhasePointOperator &op) {
  return reconstruct_terms(op.n, op.terms);
}

double total_variation(const DistributionEstimate &emp, const std::vector<ExactBranch> &exact) {
  std::map<std::string, double> p;
  for (const auto &b : exact) p[transcript_key(b.transcript)] += b.probability;
  double tv = 0;
  for (const auto &[k, f] : emp.frequency) {
    auto it = p.find(k);
    double q = it == p.end() ? 0.0 : it->second;
    tv += std::abs(f - q);
  }
  for (const auto &[k, q] : p)
    if (!emp.frequency.count(k)) tv += q;
  return tv / 2;
}

}  // namespace qpsim
