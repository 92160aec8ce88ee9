#include "doctest.h"

#include <cmath>

#include "helpers.hpp"
#include "qpsim/exact.hpp"
#include "qpsim/oracle.hpp"

using namespace qpsim;

TEST_CASE("dense paulis") {
  // T_{(1,1)} = i^{-1} Z X = Y
  auto y = dense_pauli(parse_pauli("Y"));
  CHECK(y.at(0, 1) == Rational(-1) * Cyclo8::i());
  CHECK(y.at(1, 0) == Cyclo8::i());
  CHECK(dense_pauli(parse_pauli("I")).equals_exact(DenseOperator::identity(1)));
  for (const auto &p : all_points(2)) {
    auto t = dense_pauli(PhasedPauli(0, p));
    CHECK((t * t).equals_exact(DenseOperator::identity(2)));
    CHECK(t.is_hermitian());
  }
}

TEST_CASE("named states") {
  auto h = dense_state({"H"});
  auto pc = pauli_coefficients(h);
  CHECK(pc.exact);
  CHECK(!pc.rational);
  // order: I, X, Z, Y by point key
  CHECK(pc.exact_values[0] == QSqrt2{1, 0});
  CHECK(pc.exact_values[pt_x(1, 0).key()] == QSqrt2{0, Rational(1, 2)});  // 1/sqrt2
  CHECK(pc.exact_values[pt_y(1, 0).key()] == QSqrt2{0, Rational(1, 2)});
  CHECK(pc.exact_values[pt_z(1, 0).key()] == QSqrt2{0, 0});

  auto zero = dense_state({"0"});
  IsotropicSubspace z(1);
  z.add(pt_z(1, 0), 0);
  CHECK(zero.equals_exact(make_projector(z)));

  auto prod = dense_state({"H", "0"});
  CHECK(prod.equals_exact(dense_state({"H"}).kron(dense_state({"0"}))));

  auto t = dense_state({"T"});
  CHECK(!t.is_exact());
  auto tc = pauli_coefficients(t);
  double s = 1 / std::sqrt(3.0);
  CHECK(tc.values[0] == doctest::Approx(1.0));
  CHECK(tc.values[pt_x(1, 0).key()] == doctest::Approx(s));
  CHECK(tc.values[pt_y(1, 0).key()] == doctest::Approx(s));
  CHECK(tc.values[pt_z(1, 0).key()] == doctest::Approx(s));

  CHECK_THROWS(dense_state({"Q"}));
  CHECK_THROWS(dense_state({}));
}

TEST_CASE("pauli coefficients round-trip") {
  auto mixed = DenseOperator::identity(2).scaled(Rational(1, 4));
  auto pc = pauli_coefficients(mixed);
  CHECK(pc.rational);
  CHECK(pc.exact_values[0] == QSqrt2{1, 0});
  for (size_t i = 1; i < pc.exact_values.size(); ++i) CHECK(pc.exact_values[i] == QSqrt2{0, 0});

  StreamRng rng(13, 0);
  for (int t = 0; t < 5; ++t) {
    std::vector<std::pair<PauliPoint, Rational>> terms;
    terms.emplace_back(PauliPoint::zero(2), Rational(1));
    for (const auto &p : all_points(2)) {
      if (p.is_zero()) continue;
      if (rng.next() % 3 == 0)
        terms.emplace_back(p, Rational((int64_t)(rng.next() % 7) - 3, 1 + rng.next() % 3));
    }
    auto m = reconstruct_terms(2, terms);
    auto back = pauli_coefficients(m);
    for (const auto &[p, c] : terms) {
      CHECK(back.exact_values[p.key()].v == 0);
      CHECK(back.exact_values[p.key()].u == c);
    }
  }
}

TEST_CASE("exact distribution: magic injection circuit") {
  // |H> on wire 0, |psi> = |+> on wire 1; CX 0->1; measure Z_1 -> s;
  // conditional S.X correction on wire 0; measure X_0 -> out. Output wire carries T|+>.
  Circuit c = Circuit::parse(
      "qubits 2\n"
      "state H 0\n"
      "state + 1\n"
      "gate CX 0 1\n"
      "measure +IZ -> s\n"
      "gate X 0 if s\ngate S 0 if s\n"
      "measure +XI -> out\n");
  auto rho = dense_state_of_circuit(c);
  CHECK(rho.is_exact());
  auto dist = exact_distribution(rho, c);
  REQUIRE(dist.size() == 4);
  // P(out=0 | s) = (2+sqrt2)/4 on both branches; s uniform
  double ph = (2 + std::sqrt(2.0)) / 4;
  std::map<std::string, double> want = {
      {"s=0,out=0", ph / 2}, {"s=0,out=1", (1 - ph) / 2}, {"s=1,out=0", ph / 2}, {"s=1,out=1", (1 - ph) / 2}};
  double total = 0;
  for (const auto &b : dist) {
    CHECK(b.exact);
    auto it = want.find(transcript_key(b.transcript));
    REQUIRE(it != want.end());
    CHECK(b.probability == doctest::Approx(it->second).epsilon(1e-12));
    total += b.probability;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("injection branches carry the corrected T|+> on the output wire") {
  // Bloch vector of wire 0, conditional on each s, reconstructed from the
  // three Pauli measurement marginals; equals (1/sqrt2, 1/sqrt2, 0) exactly.
  const char *axes[3] = {"+XI", "+YI", "+ZI"};
  double want[3] = {1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 0.0};
  for (int axis = 0; axis < 3; ++axis) {
    Circuit c = Circuit::parse(
        "qubits 2\nstate H 0\nstate + 1\ngate CX 0 1\nmeasure +IZ -> s\ngate X 0 if s\ngate S 0 if s\n"
        "measure " + std::string(axes[axis]) + " -> out\n");
    auto dist = exact_distribution(dense_state_of_circuit(c), c);
    for (int s = 0; s < 2; ++s) {
      double p_s = 0, p_s_out0 = 0;
      for (const auto &b : dist) {
        if (b.transcript[0].second != s) continue;
        p_s += b.probability;
        if (b.transcript.size() > 1 && b.transcript[1].second == 0) p_s_out0 += b.probability;
      }
      REQUIRE(p_s == doctest::Approx(0.5).epsilon(1e-12));
      double bloch = 2 * (p_s_out0 / p_s) - 1;
      CHECK(bloch == doctest::Approx(want[axis]).epsilon(1e-12));
    }
  }
}

TEST_CASE("exact distribution: clifford-only circuits have dyadic probabilities") {
  Circuit c = Circuit::parse(
      "qubits 2\n"
      "state 0 0\n"
      "state 0 1\n"
      "gate H 0\n"
      "gate CX 0 1\n"
      "measure +ZI -> a\n"
      "measure +IZ -> b\n");
  auto dist = exact_distribution(dense_state_of_circuit(c), c);
  QSqrt2 sum{0, 0};
  for (const auto &b : dist) {
    REQUIRE(b.exact);
    CHECK(b.exact_probability.v == 0);  // rational, in fact dyadic
    CHECK(denominator(b.exact_probability.u) == 2);
    sum.u += b.exact_probability.u;
  }
  CHECK(sum.u == 1);
  // Bell state: outcomes perfectly correlated
  CHECK(dist.size() == 2);
}

TEST_CASE("measuring the same pauli twice is deterministic") {
  Circuit c = Circuit::parse(
      "qubits 1\n"
      "state + 0\n"
      "measure +Z -> a\n"
      "measure +Z -> b\n");
  auto dist = exact_distribution(dense_state_of_circuit(c), c);
  REQUIRE(dist.size() == 2);
  for (const auto &b : dist) {
    REQUIRE(b.transcript.size() == 2);
    CHECK(b.transcript[0].second == b.transcript[1].second);
    CHECK(b.probability == doctest::Approx(0.5));
  }
}

TEST_CASE("marginals unchanged by inserted identity gates") {
  Circuit c1 = Circuit::parse(
      "qubits 1\nstate H 0\nmeasure +X -> a\n");
  Circuit c2 = Circuit::parse(
      "qubits 1\nstate H 0\ngate Z 0\ngate Z 0\nmeasure +X -> a\n");
  auto d1 = exact_distribution(dense_state_of_circuit(c1), c1);
  auto d2 = exact_distribution(dense_state_of_circuit(c2), c2);
  REQUIRE(d1.size() == d2.size());
  for (size_t i = 0; i < d1.size(); ++i)
    CHECK(d1[i].probability == doctest::Approx(d2[i].probability).epsilon(1e-12));
}

TEST_CASE("matrix dump format") {
  auto z = dense_pauli(parse_pauli("Z"));
  auto text = z.dump();
  CHECK(text.rfind("n=1\n", 0) == 0);
  CHECK(text == "n=1\n1 0 0 0\n0 0 -1 0\n");
}
