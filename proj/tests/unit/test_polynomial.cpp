#include "descartes/polynomial.hpp"

#include "doctest.h"

#include <random>

using namespace descartes;

namespace {
RootConfiguration roots(std::initializer_list<long> xs) {
  RootConfiguration rc;
  for (long x : xs) rc.roots.emplace_back(x);
  return rc;
}
}  // namespace

TEST_CASE("expansion from roots") {
  const auto p = expand_from_roots(roots({1, -2}));  // x^2 + x - 2
  REQUIRE(p.degree() == 2);
  CHECK(p[0] == -2);
  CHECK(p[1] == 1);
  CHECK(p[2] == 1);
  CHECK(p.evaluate(1) == 0);
  CHECK(p.evaluate(-2) == 0);
  CHECK(sign_pattern_of(p).str() == "++-");
}

TEST_CASE("couple of a configuration") {
  // (x+4)(x-3)(x+2)(x-1): moduli 1 < 2 < 3 < 4 read P N P N.
  const auto c = couple_of(roots({-4, 3, -2, 1}));
  CHECK(c.order.str() == "PNPN");
  CHECK(to_sign_pattern(c.pattern).str() == "++--+");
}

TEST_CASE("degenerate configurations are rejected") {
  auto kind = [](auto&& f) {
    try {
      f();
    } catch (const RealizationError& e) {
      return e.kind();
    }
    FAIL("no RealizationError");
    return RealizationError::Kind::budget_exhausted;
  };
  CHECK(kind([] { order_of(roots({2, -2, 1})); }) == RealizationError::Kind::modulus_tie);
  CHECK(kind([] { order_of(roots({0, 1})); }) == RealizationError::Kind::zero_root);
  // (x-1)(x+1) = x^2 - 1 has no x term.
  CHECK(kind([] { sign_pattern_of(expand_from_roots(roots({1, -1}))); }) == RealizationError::Kind::zero_coefficient);
}

TEST_CASE("involutions on roots match involutions on couples") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 7);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    RootConfiguration rc;
    const int d = 1 + trial % 7;
    for (int i = 0; i < d; ++i) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      rc.roots.push_back(q);
    }
    Couple c;
    try {
      c = couple_of(rc);
    } catch (const RealizationError&) {
      continue;
    }
    for (auto k : {Involution::mirror, Involution::reverse}) CHECK(couple_of(apply(rc, k)) == apply(c, k));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("rendering") {
  CHECK(expand_from_roots(roots({1, -2})).str() == "x^2 + x - 2");
}
