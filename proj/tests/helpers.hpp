// Test-only utilities: random words, random states, reference oracles.
#pragma once

#include <vector>

#include "qpsim/exact.hpp"
#include "qpsim/oracle.hpp"
#include "qpsim/phasespace.hpp"
#include "qpsim/rng.hpp"
#include "qpsim/tableau.hpp"

namespace qpsim::testing {

struct GateWord {
  std::vector<Circuit::Gate> gates;
  CliffordTableau tableau;
  DenseOperator unitary;
};

/// Random word over {H, S, CX} with its tableau and dense unitary.
inline GateWord random_gate_word(uint32_t n, size_t length, StreamRng &rng) {
  GateWord w{{}, CliffordTableau::identity(n), DenseOperator::identity(n)};
  for (size_t i = 0; i < length; ++i) {
    uint32_t q = (uint32_t)(rng.next() % n);
    uint32_t r = n > 1 ? (uint32_t)(rng.next() % (n - 1)) : 0;
    if (r >= q) ++r;
    switch (rng.next() % 3) {
      case 0:
        w.gates.push_back({"H", {q}, ""});
        break;
      case 1:
        w.gates.push_back({"S", {q}, ""});
        break;
      default:
        if (n == 1)
          w.gates.push_back({"S", {q}, ""});
        else
          w.gates.push_back({"CX", {q, r}, ""});
        break;
    }
    const auto &g = w.gates.back();
    w.tableau = w.tableau.then(CliffordTableau::from_gate(g.name, n, g.qubits));
    w.unitary = dense_gate(g.name, n, g.qubits) * w.unitary;
  }
  return w;
}

/// A random valid phase-space member (random stabilizer projector, CNC cube
/// with tail, or pair-product operator), for n in {1, 2, 3}.
inline PhasePointOperator random_member(uint32_t n, StreamRng &rng) {
  auto cube = [&](uint32_t m) {
    CncLabel label;
    label.n = m;
    label.omega = {PauliPoint::zero(m), pt_x(m, 0), pt_y(m, 0), pt_z(m, 0)};
    label.gamma = {0, (int)(rng.next() & 1), (int)(rng.next() & 1), (int)(rng.next() & 1)};
    return make_cnc_operator(label);
  };
  auto stab = [&](uint32_t m) {
    const auto &fam = stabilizer_family(m);
    return stabilizer_operator(fam[rng.next() % fam.size()]);
  };
  auto tail_subspace = [&](uint32_t m) {
    const auto &fam = stabilizer_family(m);
    return fam[rng.next() % fam.size()];
  };
  PhasePointOperator op;
  switch (n) {
    case 1:
      op = (rng.next() & 1) ? cube(1) : stab(1);
      break;
    case 2:
      switch (rng.next() % 3) {
        case 0:
          op = stab(2);
          break;
        case 1:
          op = tensor_with_tail(cube(1), tail_subspace(1));
          break;
        default: {
          MajoranaPairLabel label;
          label.n = 2;
          label.majoranas = jordan_wigner_majoranas(5);
          label.eta = rng.next() & ((1 << 10) - 1);
          op = make_majorana_pair_operator(label);
          break;
        }
      }
      break;
    default:
      switch (rng.next() % 3) {
        case 0:
          op = stab(3);
          break;
        case 1:
          op = tensor_with_tail(cube(1), tail_subspace(2));
          break;
        default: {
          MajoranaPairLabel label;
          label.n = 3;
          label.majoranas = jordan_wigner_majoranas(7);
          label.eta = rng.next() & ((1ull << 21) - 1);
          op = make_majorana_pair_operator(label);
          break;
        }
      }
      break;
  }
  // random Clifford conjugation to vary the support
  auto w = random_gate_word(n, 4 + rng.next() % 5, rng);
  return clifford_conjugate(op, w.tableau);
}

}  // namespace qpsim::testing
