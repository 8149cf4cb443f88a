#include "descartes/classification.hpp"
#include "descartes/fixtures.hpp"

#include "doctest.h"

#include <set>

using namespace descartes;

TEST_CASE("fixture ratios") {
  CHECK(fixture_ratio(1) == Rational(1));
  CHECK(fixture_ratio(2) == Rational(2, 3));
  CHECK(fixture_ratio(3) == Rational(3, 5));
  CHECK(fixture_ratio(4) == Rational(3, 7));
  CHECK(fixture_ratio(5) == Rational(47, 126));
  CHECK_FALSE(has_fixture(6));
}

TEST_CASE("fixtures are closed under both involutions") {
  for (int d = 1; d <= kFixtureMaxDegree; ++d) {
    const auto all = fixture_realizable(d);
    const std::set<Couple> s(all.begin(), all.end());
    for (const auto& c : all) {
      CHECK(s.count(apply(c, Involution::mirror)));
      CHECK(s.count(apply(c, Involution::reverse)));
    }
  }
}

TEST_CASE("degree 1 to 4 tables match the fixtures") {
  for (int d = 1; d <= 4; ++d) {
    const auto t = classify_degree(d, SearchConfig{}, 2);
    CAPTURE(d);
    CHECK(t.matches_fixture());
    CHECK(t.consistent());
    CHECK(t.unresolved == 0);
    CHECK(t.lower == fixture_ratio(d));
    for (const auto& r : t.records)
      if (r.status.witness) CHECK(validates(r.couple, *r.status.witness));
  }
}

TEST_CASE("example for degree 2") {
  const auto t = classify_degree(2, SearchConfig{}, 1);
  CHECK(t.realized == 4);
  CHECK(t.impossible == 2);
  for (const auto& r : t.records) {
    const auto s = r.couple.str();
    if (s == "(cp, PN)" || s == "(pc, NP)")
      CHECK(r.status.status == Status::impossible);
    else
      CHECK(r.status.status == Status::realized);
  }
}

TEST_CASE("tables do not depend on the worker count") {
  const auto a = classify_degree(4, SearchConfig{}, 1);
  const auto b = classify_degree(4, SearchConfig{}, 4);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].couple == b.records[i].couple);
    CHECK(a.records[i].status.status == b.records[i].status.status);
    CHECK(a.records[i].status.witness == b.records[i].status.witness);
  }
}

TEST_CASE("sigma and pattern orbits") {
  CHECK(sigma({3, 3, 1}).str() == "+++---+");
  CHECK(sigma({2, 3}).str() == "++---");
  CHECK(pattern_orbit(sigma({2, 3})).size() == 4);
  CHECK(pattern_orbit(SignPattern::parse("++++")).size() == 2);
}

TEST_CASE("square family coverage") {
  for (int d = 5; d <= 7; ++d) {
    const auto cov = square_family_coverage(d);
    CHECK(cov.total == binomial(d, 2));
    CHECK(cov.realized == cov.total);
  }
}

TEST_CASE("structure report at small degree") {
  for (int d = 1; d <= 5; ++d) {
    const auto r = theorem1_report(d, SearchConfig{}, 2);
    CHECK(r.ok());
    for (const auto& p : r.parts) CHECK(p.verdict != Verdict::failed);
  }
}
