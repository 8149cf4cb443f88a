#include "descartes/counting.hpp"

#include "doctest.h"

using namespace descartes;

TEST_CASE("chi") {
  CHECK(chi(1) == 2);
  CHECK(chi(2) == 6);
  CHECK(chi(5) == 252);
  for (int d = 1; d <= 7; ++d) CHECK(chi_by_enumeration(d) == chi(d));
  CHECK(chi(40) == binomial(80, 40));
}

TEST_CASE("catalan") {
  const long expected[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int k = 0; k < 8; ++k) CHECK(catalan(k) == expected[k]);
}

TEST_CASE("interlacing") {
  CHECK(satisfies_interlacing(ModuliOrder::parse("PN")));
  CHECK_FALSE(satisfies_interlacing(ModuliOrder::parse("NP")));
  CHECK(satisfies_interlacing(ModuliOrder::parse("PNN")));
  CHECK(satisfies_interlacing(ModuliOrder::parse("NPN")));
  CHECK_FALSE(satisfies_interlacing(ModuliOrder::parse("NNP")));
  CHECK(satisfies_interlacing(ModuliOrder::parse("NNN")));
}

TEST_CASE("T_d^c known values") {
  CHECK(t_dc_closed(4, 2) == 2);
  CHECK(t_dc_closed(2, 1) == 1);
  CHECK(t_dc_closed(3, 1) == 2);
  CHECK(t_dc_closed(5, 2) == 5);
  CHECK(t_dc_closed(6, 3) == 5);
  for (int d = 1; d <= 12; ++d) CHECK(t_dc_closed(d, 0) == 1);
  CHECK(t_dc_catalan_sum(4, 2) == 2);
  CHECK(t_dc_catalan_sum(6, 3) == 5);
  CHECK(t_dc_bruteforce(3, 1) == 2);
}

TEST_CASE("T_d^c three ways agree for d <= 12") {
  for (int d = 1; d <= 12; ++d)
    for (int c = 0; 2 * c <= d; ++c) {
      CAPTURE(d);
      CAPTURE(c);
      const auto a = t_dc_closed(d, c);
      CHECK(a == t_dc_catalan_sum(d, c));
      CHECK(a == t_dc_bruteforce(d, c));
    }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(t_dc_closed(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(t_dc_closed(4, -1), std::invalid_argument);
  CHECK_THROWS_AS(t_dc_bruteforce(20, 2), std::invalid_argument);
  CHECK_THROWS_AS(chi(0), std::invalid_argument);
}

TEST_CASE("leading-sum exclusions are a proper part of chi") {
  for (int d = 1; d <= 16; ++d) {
    CHECK(leading_sum_excluded(d) >= 0);
    CHECK(leading_sum_excluded(d) < chi(d));
  }
}
