#include "descartes/numeric.hpp"

#include "doctest.h"

#include <stdexcept>

using namespace descartes;

TEST_CASE("parse_rational accepts fractions, decimals and integers") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("-1.25") == Rational(-5, 4));
  CHECK(parse_rational("4") == Rational(4));
  CHECK(parse_rational("0.1") == Rational(1, 10));
}

TEST_CASE("parse_rational rejects garbage") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("to_string prints num/den or a bare integer") {
  // mpq_class does not canonicalize on construction.
  Rational a(-3, 6), b(8, 4);
  a.canonicalize();
  b.canonicalize();
  CHECK(to_string(a) == "-1/2");
  CHECK(to_string(b) == "2");
  CHECK(to_string(Integer("123456789012345678901234567890")) == "123456789012345678901234567890");
}

TEST_CASE("binomial") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(40, 20) == Integer("137846528820"));
}

TEST_CASE("mix_seed separates streams") {
  CHECK(mix_seed(1, 0) != mix_seed(1, 1));
  CHECK(mix_seed(1, 0) != mix_seed(2, 0));
  CHECK(mix_seed(7, 3) == mix_seed(7, 3));
}
