#include "doctest.h"

#include <cmath>

#include "helpers.hpp"
#include "qpsim/decompose.hpp"
#include "qpsim/exact.hpp"
#include "qpsim/simulate.hpp"

using namespace qpsim;
using qpsim::testing::random_gate_word;
using qpsim::testing::random_member;

namespace {
PhasePointOperator plus_z_op() {
  // (1 + Z)/2
  IsotropicSubspace z(1);
  z.add(pt_z(1, 0), 0);
  return stabilizer_operator(z);
}

PhasePointOperator cube_op() {
  CncLabel cube;
  cube.n = 1;
  cube.omega = {PauliPoint::zero(1), pt_x(1, 0), pt_y(1, 0), pt_z(1, 0)};
  cube.gamma = {0, 0, 0, 0};
  return make_cnc_operator(cube);
}
}  // namespace

TEST_CASE("circuit parsing") {
  auto text =
      "qubits 2\n"
      "state H 0\n"
      "state + 1\n"
      "gate CX 0 1\n"
      "measure +IZ -> s\n"
      "gate X 0 if s\n"
      "gate S 0 if s\n"
      "measure +XI -> out\n";
  auto c = Circuit::parse(text);
  CHECK(c.n == 2);
  CHECK(c.elements.size() == 5);
  CHECK(c.to_text() == text);

  CHECK_THROWS_WITH_AS(Circuit::parse("qubits 1\nmeasure Z\n"), doctest::Contains("line 2"),
                       std::invalid_argument);
  CHECK_THROWS(Circuit::parse("qubits 1\ngate S 0 if s\nmeasure +Z -> s\n"));  // later label
  CHECK_THROWS(Circuit::parse("qubits 1\nmeasure +I -> a\n"));                  // identity target
  CHECK_THROWS(Circuit::parse("qubits 1\nmeasure +iZ -> a\n"));                 // non-Hermitian
}

TEST_CASE("clifford updates on canonical states") {
  auto st = CanonicalState::from_operator(plus_z_op());
  st.apply_clifford(CliffordTableau::identity(1));
  CHECK(st.coefficient_of(pt_z(1, 0)) == 1);
  st.apply_clifford(CliffordTableau::h(1, 0));
  CHECK(st.coefficient_of(pt_x(1, 0)) == 1);
  CHECK(st.coefficient_of(pt_z(1, 0)) == 0);

  // frustration graphs before/after are isomorphic (equal edge counts here)
  StreamRng rng(61, 0);
  for (int t = 0; t < 10; ++t) {
    auto op = random_member(2, rng);
    auto st2 = CanonicalState::from_operator(op);
    std::vector<PauliPoint> before;
    for (const auto &[p, c] : st2.core())
      if (!p.is_zero()) before.push_back(p);
    auto w = random_gate_word(2, 4, rng);
    st2.apply_clifford(w.tableau);
    std::vector<PauliPoint> after;
    for (const auto &[p, c] : st2.core())
      if (!p.is_zero()) after.push_back(p);
    REQUIRE(before.size() == after.size());
    CHECK(frustration_graph(before).num_edges() == frustration_graph(after).num_edges());
  }
}

TEST_CASE("measurement updates: named cases") {
  // Z on (1+Z)/2: outcome 0 with probability 1, state unchanged
  auto st = CanonicalState::from_operator(plus_z_op());
  CHECK(st.outcome_probability(parse_pauli("Z"), 0) == 1);
  CHECK(st.measure_update(parse_pauli("Z"), 0) == 1);
  CHECK(st.coefficient_of(pt_z(1, 0)) == 1);
  CHECK_THROWS(st.measure_update(parse_pauli("Z"), 1));  // probability-zero branch

  // Z on (1+X+Y+Z)/2: s=0 certain, post-state |0><0|
  auto st2 = CanonicalState::from_operator(cube_op());
  CHECK(st2.outcome_probability(parse_pauli("Z"), 0) == 1);
  st2.measure_update(parse_pauli("Z"), 0);
  CHECK(reconstruct_state(st2).equals_exact(reconstruct_operator(plus_z_op())));

  // X on (1+Z)/2: uniform outcome, post-state (1 +- X)/2
  auto st3 = CanonicalState::from_operator(plus_z_op());
  CHECK(st3.outcome_probability(parse_pauli("X"), 0) == Rational(1, 2));
  st3.measure_update(parse_pauli("X"), 1);
  CHECK(st3.coefficient_of(pt_x(1, 0)) == -1);
  CHECK(st3.coefficient_of(pt_z(1, 0)) == 0);

  // measuring -Z flips the outcome convention
  auto st4 = CanonicalState::from_operator(plus_z_op());
  CHECK(st4.outcome_probability(parse_pauli("-Z"), 1) == 1);
}

TEST_CASE("randomized step-level oracle equivalence and closure") {
  StreamRng rng(67, 0);
  int steps = 0, closure_checks = 0;
  for (int trial = 0; trial < 40; ++trial) {
    uint32_t n = 1 + (uint32_t)(trial % 3);
    auto op = random_member(n, rng);
    auto st = CanonicalState::from_operator(op);
    auto rho = reconstruct_operator(op);
    for (int k = 0; k < 5; ++k) {
      if (rng.next() % 2) {
        auto w = random_gate_word(n, 3, rng);
        st.apply_clifford(w.tableau);
        rho = conjugate(w.unitary, rho);
      } else {
        PauliPoint a(n, rng.next() & ((1ull << n) - 1), rng.next() & ((1ull << n) - 1));
        if (a.is_zero()) continue;
        PhasedPauli target(0, a);
        Rational p1 = st.outcome_probability(target, 1);
        int s = rng.bernoulli(p1) ? 1 : 0;
        Rational p = st.measure_update(target, s);
        // oracle: Pi rho Pi / tr
        auto t = dense_pauli(target);
        auto id = DenseOperator::identity(n);
        auto pi = (s ? id - t : id + t).scaled(Rational(1, 2));
        auto post = pi * rho * pi;
        auto tr = post.real_trace();
        REQUIRE(tr.v == 0);
        REQUIRE(tr.u == p);
        // renormalize exactly
        rho = post.scaled(Rational(denominator(p), numerator(p)));
      }
      REQUIRE(reconstruct_state(st).equals_exact(rho));
      ++steps;
      if (!st.core().empty()) {
        CHECK(st.core_is_line_graph());
        ++closure_checks;
      }
      if (n <= 2 && k == 4) {
        // reconstructed states stay inside the stabilizer polytope
        PhasePointOperator flat;
        flat.n = n;
        flat.terms = st.expanded_terms();
        flat.normalize();
        CHECK(lambda_membership(flat).member);
      }
    }
  }
  CHECK(steps >= 150);
  CHECK(closure_checks >= 100);
}

TEST_CASE("simulate_run basics") {
  // no measurements -> empty transcript
  auto circ = Circuit::parse("qubits 1\nstate 0 0\ngate H 0\n");
  std::vector<PhasePointOperator> ops = {plus_z_op()};
  std::vector<Rational> w = {Rational(1)};
  CHECK(simulate_run(ops, w, circ, 5, 0).empty());

  // determinism: same seed, same transcript; different shots vary
  auto circ2 = Circuit::parse("qubits 1\nstate 0 0\ngate H 0\nmeasure +Z -> a\nmeasure +X -> b\n");
  auto t1 = simulate_run(ops, w, circ2, 7, 3);
  auto t2 = simulate_run(ops, w, circ2, 7, 3);
  CHECK(transcript_key(t1) == transcript_key(t2));
}

TEST_CASE("serial and parallel shot loops produce identical counts") {
  auto circ = Circuit::parse(
      "qubits 1\nstate H 0\nmeasure +Z -> a\nmeasure +X -> b\n");
  auto v1 = build_phase_space(1, {});
  auto rho = PauliVector::from_float(1, pauli_coefficients(dense_state({"H"})).values);
  auto dec = decompose_nonnegative(rho, v1);
  REQUIRE(dec.feasible);
  std::vector<PhasePointOperator> ops;
  std::vector<Rational> w;
  for (const auto &[idx, weight] : dec.weights) {
    ops.push_back(v1[idx]);
    w.push_back(Rational(weight));  // float path: weights are near-exact dyadics
  }
  auto ser = estimate_distribution_serial(ops, w, circ, 2000, 11);
  auto par = estimate_distribution(ops, w, circ, 2000, 11);
  CHECK(ser.counts == par.counts);
}

TEST_CASE("sampled distributions track the oracle") {
  // Gottesman-Knill regime: stabilizer input, Clifford circuit
  auto circ = Circuit::parse(
      "qubits 2\nstate 0 0\nstate 0 1\ngate H 0\ngate CX 0 1\nmeasure +ZI -> a\nmeasure +IZ -> b\n");
  IsotropicSubspace zz(2);
  zz.add(parse_pauli("ZI").pt, 0);
  zz.add(parse_pauli("IZ").pt, 0);
  std::vector<PhasePointOperator> ops = {stabilizer_operator(zz)};
  std::vector<Rational> w = {Rational(1)};
  auto est = estimate_distribution(ops, w, circ, 4000, 13);
  auto oracle = exact_distribution(dense_state_of_circuit(circ), circ);
  CHECK(total_variation(est, oracle) < 0.05);
  // correlated Bell outcomes only
  for (const auto &[k, c] : est.counts) CHECK((k == "a=0,b=0" || k == "a=1,b=1"));
}

TEST_CASE("quasi estimation with signed weights") {
  // |H> over the stabilizer octahedron: one-norm sqrt(2) > 1
  auto circ = Circuit::parse("qubits 1\nstate H 0\nmeasure +X -> a\n");
  std::vector<PhasePointOperator> stabs;
  for (const auto &s : stabilizer_family(1)) stabs.push_back(stabilizer_operator(s));
  auto rho = PauliVector::from_float(1, pauli_coefficients(dense_state({"H"})).values);
  auto rb = robustness(rho, stabs);
  REQUIRE(rb.feasible);
  std::vector<double> w(stabs.size(), 0.0);
  for (const auto &[idx, weight] : rb.weights) w[idx] = weight;
  Transcript target = {{"a", 0}};
  auto est = quasi_estimate(stabs, w, circ, target, 60000, 17);
  double truth = (2 + std::sqrt(2.0)) / 4;  // <+|H>|^2
  CHECK(std::abs(est.estimate - truth) <= 3 * est.std_error + 1e-12);
  CHECK(est.one_norm == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));

  // nonnegative weights reduce to plain frequency estimation
  auto v1 = build_phase_space(1, {});
  auto dec = decompose_nonnegative(rho, v1);
  REQUIRE(dec.feasible);
  std::vector<double> wpos(v1.size(), 0.0);
  for (const auto &[idx, weight] : dec.weights) wpos[idx] = weight;
  auto est2 = quasi_estimate(v1, wpos, circ, target, 60000, 19);
  CHECK(est2.one_norm == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(est2.estimate - truth) <= 3 * est2.std_error + 1e-12);

  // error bars grow with the one-norm on an interpolated family
  auto interp = [&](double t) {
    std::vector<double> fx = {1, t / std::sqrt(2.0), t / std::sqrt(2.0), 0};
    return PauliVector::from_float(1, fx);
  };
  double prev_norm = 0;
  for (double t : {0.2, 0.9, 1.0}) {
    auto r = robustness(interp(t), stabs);
    REQUIRE(r.feasible);
    CHECK(r.one_norm >= prev_norm - 1e-9);
    prev_norm = r.one_norm;
  }
}
