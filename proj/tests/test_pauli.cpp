#include "doctest.h"

#include "qpsim/oracle.hpp"
#include "qpsim/pauli.hpp"
#include "qpsim/rng.hpp"

using namespace qpsim;

TEST_CASE("product phase convention") {
  auto X = parse_pauli("X"), Z = parse_pauli("Z"), Y = parse_pauli("Y");
  CHECK(mul(X, X) == PhasedPauli::identity(1));
  CHECK(mul(PhasedPauli::identity(1), Y) == Y);
  CHECK(mul(Z, X) == PhasedPauli(1, pt_y(1, 0)));  // Z X = i Y

  // dense 2x2 oracle for Z X
  auto lhs = dense_pauli(Z) * dense_pauli(X);
  auto rhs = dense_pauli(mul(Z, X));
  CHECK(lhs.equals_exact(rhs));
}

TEST_CASE("products agree with the dense oracle for all n=2 pairs") {
  for (const auto &a : all_points(2))
    for (const auto &b : all_points(2)) {
      PhasedPauli pa(0, a), pb(0, b);
      auto lhs = dense_pauli(pa) * dense_pauli(pb);
      auto rhs = dense_pauli(mul(pa, pb));
      REQUIRE(lhs.equals_exact(rhs));
    }
}

TEST_CASE("symplectic product tracks commutators") {
  CHECK(symplectic(pt_z(1, 0), pt_x(1, 0)) == 1);
  CHECK(symplectic(pt_z(2, 0), pt_x(2, 1)) == 0);
  CHECK(symplectic(parse_pauli("XX").pt, parse_pauli("ZZ").pt) == 0);
  CHECK_THROWS(symplectic(pt_z(1, 0), pt_x(2, 0)));

  // T_a T_b = (-1)^[a,b] T_b T_a
  for (const auto &a : all_points(2))
    for (const auto &b : all_points(2)) {
      PhasedPauli ab = mul(PhasedPauli(0, a), PhasedPauli(0, b));
      PhasedPauli ba = mul(PhasedPauli(0, b), PhasedPauli(0, a));
      CHECK(ab.pt == ba.pt);
      CHECK(((ab.phase - ba.phase) % 4 + 4) % 4 == 2 * symplectic(a, b));
    }
}

TEST_CASE("beta") {
  for (const auto &a : all_points(2)) CHECK(beta(a, a) == 0);
  CHECK(beta(parse_pauli("ZI").pt, parse_pauli("IZ").pt) == 0);
  CHECK_THROWS(beta(pt_z(1, 0), pt_x(1, 0)));

  auto a = parse_pauli("XX").pt, b = parse_pauli("ZZ").pt;
  int bb = beta(a, b);
  // dense 4x4 oracle: T_a T_b == (-1)^beta T_{a+b}
  auto lhs = dense_pauli(PhasedPauli(0, a)) * dense_pauli(PhasedPauli(0, b));
  auto rhs = dense_pauli(PhasedPauli(2 * bb, a ^ b));
  CHECK(lhs.equals_exact(rhs));
  CHECK(bb == 1);
}

TEST_CASE("pauli text form round-trips") {
  for (const char *s : {"+XZI", "-iYZ", "+I", "-Z", "+iXX"}) {
    auto p = parse_pauli(s);
    CHECK(to_string(p) == s);
  }
  CHECK(to_string(parse_pauli("XZ")) == "+XZ");
  CHECK_THROWS(parse_pauli("XQ"));
  CHECK_THROWS(parse_pauli(""));

  StreamRng rng(7, 0);
  for (int t = 0; t < 200; ++t) {
    uint32_t n = 1 + rng.next() % 4;
    PhasedPauli p((int)(rng.next() % 4),
                  PauliPoint(n, rng.next() & ((1ull << n) - 1), rng.next() & ((1ull << n) - 1)));
    CHECK(parse_pauli(to_string(p)) == p);
  }
}

TEST_CASE("isotropic subspaces extend signs consistently") {
  StreamRng rng(11, 0);
  for (int t = 0; t < 50; ++t) {
    uint32_t n = 1 + rng.next() % 3;
    IsotropicSubspace sub(n);
    for (int tries = 0; tries < 20 && sub.dim() < n; ++tries) {
      PauliPoint p(n, rng.next() & ((1ull << n) - 1), rng.next() & ((1ull << n) - 1));
      if (p.is_zero() || !sub.commutes_with(p) || sub.in_span(p)) continue;
      sub.add(p, (int)(rng.next() & 1));
    }
    auto elems = sub.span_elements();
    for (const auto &[a, ra] : elems)
      for (const auto &[b, rb] : elems) {
        int rab = sub.sign_of(a ^ b);
        CHECK(((ra + rb + rab) & 1) == beta(a, b));
      }
  }
}

TEST_CASE("inconsistent signs are rejected") {
  // basis {ZI, IZ} with signs 0,0 implies r(ZZ) = beta = 0; adding ZZ with 1 fails
  IsotropicSubspace sub(2);
  sub.add(parse_pauli("ZI").pt, 0);
  sub.add(parse_pauli("IZ").pt, 0);
  CHECK_THROWS(sub.add(parse_pauli("ZZ").pt, 1));
  CHECK_NOTHROW(sub.add(parse_pauli("ZZ").pt, 0));
  CHECK_THROWS(sub.add(parse_pauli("XX").pt, 0));  // anticommutes with ZI
}

TEST_CASE("projectors from isotropic subspaces") {
  // I = {0}: the projector formula gives the identity
  IsotropicSubspace trivial(1);
  CHECK(make_projector(trivial).equals_exact(DenseOperator::identity(1)));

  // <Z>, r(Z)=0 -> |0><0|
  IsotropicSubspace z(1);
  z.add(pt_z(1, 0), 0);
  auto pi = make_projector(z);
  CHECK(pi.at(0, 0) == Cyclo8::one());
  CHECK(pi.at(1, 1) == Cyclo8::zero());

  // every n=2 stabilizer projector: idempotent, Hermitian, trace 1
  for (const auto &stab : enumerate_stabilizer_projectors(2)) {
    auto p = make_projector(stab);
    REQUIRE((p * p).equals_exact(p));
    REQUIRE(p.is_hermitian());
    auto tr = p.real_trace();
    REQUIRE(tr.u == 1);
    REQUIRE(tr.v == 0);
  }
}

TEST_CASE("stabilizer projector enumeration counts") {
  // 2^n prod_{k=1..n} (2^k + 1)
  CHECK(enumerate_stabilizer_projectors(1).size() == 6);
  CHECK(enumerate_stabilizer_projectors(2).size() == 60);
  CHECK(enumerate_stabilizer_projectors(3).size() == 1080);
  CHECK_THROWS(enumerate_stabilizer_projectors(4));

  // duplicate-free
  auto fam = enumerate_stabilizer_projectors(2);
  std::set<std::string> keys;
  for (const auto &s : fam) keys.insert(s.key());
  CHECK(keys.size() == fam.size());
}
