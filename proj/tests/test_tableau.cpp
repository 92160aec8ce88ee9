#include "doctest.h"

#include "helpers.hpp"
#include "qpsim/oracle.hpp"
#include "qpsim/tableau.hpp"

using namespace qpsim;
using qpsim::testing::random_gate_word;

TEST_CASE("defining generator actions") {
  auto h = CliffordTableau::h(1, 0);
  CHECK(h.apply(parse_pauli("Z")) == parse_pauli("X"));
  CHECK(h.apply(parse_pauli("X")) == parse_pauli("Z"));

  auto s = CliffordTableau::s(1, 0);
  CHECK(s.apply(parse_pauli("X")) == parse_pauli("Y"));  // phase 0 under the convention

  auto cx = CliffordTableau::cx(2, 0, 1);
  CHECK(cx.apply(parse_pauli("XI")) == parse_pauli("XX"));
  CHECK(cx.apply(parse_pauli("IZ")) == parse_pauli("ZZ"));
}

TEST_CASE("every named gate matches dense conjugation on all n=2 paulis") {
  struct Spec {
    const char *name;
    std::vector<uint32_t> qs;
  };
  std::vector<Spec> gates = {{"H", {0}},  {"H", {1}},    {"S", {0}},  {"SDG", {1}}, {"SX", {0}},
                             {"SXDG", {1}}, {"X", {0}},  {"Y", {1}},  {"Z", {0}},   {"CX", {0, 1}},
                             {"CX", {1, 0}}, {"CZ", {0, 1}}, {"SWAP", {0, 1}}};
  for (const auto &g : gates) {
    auto t = CliffordTableau::from_gate(g.name, 2, g.qs);
    auto u = dense_gate(g.name, 2, g.qs);
    CHECK((u * u.adjoint()).equals_exact(DenseOperator::identity(2)));  // unitarity
    for (const auto &p : all_points(2)) {
      PhasedPauli img = t.apply(PhasedPauli(0, p));
      REQUIRE(img.hermitian());
      auto lhs = conjugate(u, dense_pauli(PhasedPauli(0, p)));
      REQUIRE(lhs.equals_exact(dense_pauli(img)));
    }
  }
}

TEST_CASE("random words: tableau action equals dense conjugation (n <= 3)") {
  StreamRng rng(3, 0);
  for (uint32_t n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < (n == 3 ? 4 : 10); ++trial) {
      auto w = random_gate_word(n, 6, rng);
      size_t checks = 0;
      for (const auto &p : all_points(n)) {
        if (n == 3 && (rng.next() % 4)) continue;  // sample at n=3
        PhasedPauli img = w.tableau.apply(PhasedPauli(0, p));
        auto lhs = conjugate(w.unitary, dense_pauli(PhasedPauli(0, p)));
        REQUIRE(lhs.equals_exact(dense_pauli(img)));
        ++checks;
      }
      CHECK(checks > 0);
    }
  }
}

TEST_CASE("tableau action is symplectic") {
  StreamRng rng(5, 0);
  for (uint32_t n = 1; n <= 3; ++n) {
    auto w = random_gate_word(n, 8, rng);
    for (int t = 0; t < 50; ++t) {
      PauliPoint a(n, rng.next() & ((1ull << n) - 1), rng.next() & ((1ull << n) - 1));
      PauliPoint b(n, rng.next() & ((1ull << n) - 1), rng.next() & ((1ull << n) - 1));
      CHECK(symplectic(w.tableau.apply_point(a), w.tableau.apply_point(b)) == symplectic(a, b));
    }
  }
}

TEST_CASE("composition order") {
  auto h = CliffordTableau::h(1, 0), s = CliffordTableau::s(1, 0);
  auto hs = h.then(s);  // apply h, then s
  auto p = parse_pauli("Z");
  CHECK(hs.apply(p) == s.apply(h.apply(p)));
}
