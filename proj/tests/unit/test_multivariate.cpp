#include "descartes/matrix.hpp"
#include "descartes/multivariate.hpp"

#include "doctest.h"

#include <random>

using namespace descartes;
using Poly = MultivariatePolynomial;

namespace {
Poly a(int j) { return Poly::variable(j); }
}  // namespace

TEST_CASE("ring arithmetic") {
  const Poly x = a(0), y = a(1);
  const Poly s = (x + y) * (x - y);
  CHECK(s == x * x - y * y);
  CHECK((x + y) * (x + y) == x * x + Poly(2) * x * y + y * y);
  CHECK((x - x).is_zero());
  CHECK(s.total_degree() == 2);
  CHECK(Poly(0).is_zero());
  CHECK((Poly(3) * x * y * y).variable_count() == 2);
}

TEST_CASE("exact division") {
  const Poly x = a(0), y = a(1), z = a(2);
  const Poly f = x * x * y - Poly(3) * y * z + x;
  const Poly g = x + z * z - Poly(2);
  CHECK(divide_exact(f * g, g) == f);
  CHECK(divide_exact(f * g, f) == g);
  CHECK((Poly(6) * f).divide_exact(6) == f);
  CHECK_THROWS(divide_exact(f, g));
  CHECK_THROWS((f + Poly(1)).divide_exact(2) == f);
}

TEST_CASE("evaluation and substitution") {
  const Poly x = a(0), y = a(1);
  const Poly f = Poly(2) * x * x * y - y + Poly(5);
  CHECK(f.evaluate({Rational(1, 2), Rational(3)}) == Rational(1, 2) * 3 - 3 + 5);
  CHECK(f.substitute(0, 2) == Poly(7) * y + Poly(5));
}

TEST_CASE("printing in descending graded order") {
  const Poly x = a(0), y = a(1);
  CHECK((x * y * y - Poly(3) * x + Poly(1)).str() == "1 * a0^1 a1^2 - 3 * a0^1 + 1");
  CHECK(Poly().str() == "0");
}

TEST_CASE("Bareiss agrees with cofactor expansion") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> v(-4, 4);
  for (int n = 1; n <= 6; ++n)
    for (int t = 0; t < 20; ++t) {
      RationalMatrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = v(rng);
      CHECK(det_fraction_free(m) == det_cofactor(m));
    }
  // Symbolic 4x4 with zero pivots.
  PolynomialMatrix p(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if ((i + j) % 3 != 0) p(i, j) = a((i * 4 + j) % 5) - Poly(i - j);
  CHECK(det_fraction_free(p) == det_cofactor(p));
}

TEST_CASE("matrix minors and blocks") {
  RationalMatrix m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = 3 * i + j;
  const auto mn = m.minor(1, 1);
  CHECK(mn(0, 0) == 0);
  CHECK(mn(1, 1) == 8);
  const auto b = m.block(1, 1, 2, 2);
  CHECK(b(0, 0) == 4);
  CHECK(b(1, 1) == 8);
  CHECK_THROWS(det_fraction_free(RationalMatrix(2, 3)));
}
