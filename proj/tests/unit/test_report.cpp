#include "descartes/report.hpp"

#include "doctest.h"

using namespace descartes;

TEST_CASE("witness JSON round-trips") {
  RootConfiguration rc;
  rc.roots = {Rational(1, 3), Rational(-7), parse_rational("-0.25")};
  const auto j = witness_json(rc);
  CHECK(j.dump() == R"(["1/3","-7","-1/4"])");
  CHECK(witness_from_json(j) == rc);
  CHECK(witness_from_json(Json::parse("[2, \"-3/2\"]")).roots.size() == 2);
  CHECK_THROWS(witness_from_json(Json::parse("[1.5]")));
  CHECK_THROWS(witness_from_json(Json::parse("{}")));
  CHECK_THROWS(witness_from_json(Json::parse("[]")));
}

TEST_CASE("fixed formatting ignores locale") {
  CHECK(fixed(0.5) == "0.500000");
  CHECK(fixed(1.0 / 3.0, 3) == "0.333");
}

TEST_CASE("table renderings") {
  const auto t = classify_degree(3, SearchConfig{}, 1);
  const auto j = table_json(t);
  CHECK(j["summary"]["compatible"] == "20");
  CHECK(j["summary"]["ratio_lower"] == "3/5");
  CHECK(j["summary"]["fixture"]["matches"] == true);
  CHECK(j["couples"].size() == 20);
  // Every witness in the JSON re-validates.
  for (const auto& c : j["couples"]) {
    if (!c.contains("witness")) continue;
    const Couple couple{parse_pattern(c["pattern"].get<std::string>()),
                        ModuliOrder::parse(c["order"].get<std::string>())};
    CHECK(validates(couple, witness_from_json(c["witness"])));
  }
  const auto csv = table_csv(t);
  CHECK(csv.rfind("pattern,cpp,order,status,filter,witness\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 21);
  const auto md = table_markdown(t);
  CHECK(md.find("| 1 | +++- | PNN | NNP (canonical), NPN (canonical) |  | 1/3 |") != std::string::npos);
  CHECK(md.find("ratio in [3/5, 3/5]") != std::string::npos);
}

TEST_CASE("counts table") {
  const auto j = counts_json(16);
  CHECK(j["rows"].size() == 16);
  CHECK(j["rows"][15]["chi"] == to_string(binomial(32, 16)));
  CHECK(counts_csv(3).find("2,6,\"1 1\",") != std::string::npos);
  CHECK_THROWS(counts_json(0));
}
