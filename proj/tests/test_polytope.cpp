#include "doctest.h"

#include <set>

#include "qpsim/polytope.hpp"

using namespace qpsim;

namespace {
Halfspace hs(std::vector<long> a, long b) {
  Halfspace h;
  h.a.assign(a.begin(), a.end());
  h.b = b;
  return h;
}
}  // namespace

TEST_CASE("cube vertices") {
  std::vector<Halfspace> sys;
  for (int i = 0; i < 3; ++i)
    for (int s : {1, -1}) {
      std::vector<long> a(3, 0);
      a[i] = s;
      sys.push_back(hs(a, 1));
    }
  auto v = dd_vertices(sys, 3);
  REQUIRE(v.size() == 8);
  for (const auto &x : v)
    for (const auto &c : x) CHECK((c == 1 || c == -1));
}

TEST_CASE("octahedron (degenerate vertices on 4 facets)") {
  std::vector<Halfspace> sys;
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      for (int sz : {1, -1}) sys.push_back(hs({sx, sy, sz}, 1));
  auto v = dd_vertices(sys, 3);
  REQUIRE(v.size() == 6);
  std::set<std::vector<Rational>> got(v.begin(), v.end());
  for (int i = 0; i < 3; ++i)
    for (int s : {1, -1}) {
      std::vector<Rational> x(3, Rational(0));
      x[i] = s;
      CHECK(got.count(x) == 1);
    }
}

TEST_CASE("redundant halfspaces do not add vertices") {
  std::vector<Halfspace> sys;
  for (int i = 0; i < 2; ++i)
    for (int s : {1, -1}) {
      std::vector<long> a(2, 0);
      a[i] = s;
      sys.push_back(hs(a, 1));
    }
  sys.push_back(hs({1, 1}, 5));   // slack everywhere
  sys.push_back(hs({1, 0}, 1));   // duplicate
  auto v = dd_vertices(sys, 2);
  CHECK(v.size() == 4);
}

TEST_CASE("lower-dimensional feasible sets") {
  // x + y <= 1, -(x + y) <= -1 forces the segment x + y = 1 inside the box
  std::vector<Halfspace> sys;
  sys.push_back(hs({1, 1}, -1));   // x + y >= 1
  sys.push_back(hs({-1, -1}, 1));  // x + y <= 1
  for (int i = 0; i < 2; ++i)
    for (int s : {1, -1}) {
      std::vector<long> a(2, 0);
      a[i] = s;
      sys.push_back(hs(a, 1));
    }
  auto v = dd_vertices(sys, 2);
  std::set<std::vector<Rational>> got(v.begin(), v.end());
  CHECK(got.count({Rational(0), Rational(1)}) == 1);
  CHECK(got.count({Rational(1), Rational(0)}) == 1);
  CHECK(v.size() == 2);
}

TEST_CASE("rational vertex coordinates") {
  // triangle with a fractional vertex: 2x + y <= 1, -x <= 0, -y <= 0
  std::vector<Halfspace> sys;
  sys.push_back(hs({-2, -1}, 1));
  sys.push_back(hs({1, 0}, 0));
  sys.push_back(hs({0, 1}, 0));
  auto v = dd_vertices(sys, 2);
  std::set<std::vector<Rational>> got(v.begin(), v.end());
  CHECK(got.count({Rational(0), Rational(0)}) == 1);
  CHECK(got.count({Rational(1, 2), Rational(0)}) == 1);
  CHECK(got.count({Rational(0), Rational(1)}) == 1);
  CHECK(v.size() == 3);
}
