#include "descartes/cli.hpp"
#include "descartes/report.hpp"

#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

using namespace descartes;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "descartes");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path tmp(const std::string& name) {
  const char* dir = std::getenv("TEST_TMPDIR");
  return std::filesystem::path(dir ? dir : std::filesystem::temp_directory_path().string()) / name;
}

}  // namespace

TEST_CASE("classify") {
  auto r = run({"classify", "--degree", "3"});
  CHECK(r.code == kExitOk);
  const auto j = Json::parse(r.out);
  CHECK(j["table"]["summary"]["ratio_lower"] == "3/5");

  r = run({"classify", "--degree", "5", "--format", "json"});
  CHECK(r.code == kExitOk);
  const auto j5 = Json::parse(r.out);
  CHECK(j5["table"]["summary"]["realized_positive_half"] == 47);
  CHECK(j5["table"]["summary"]["ratio_lower"] == "47/126");

  CHECK(run({"classify", "--degree", "0"}).code == kExitUsage);
  CHECK(run({"classify"}).code == kExitUsage);
  CHECK(run({"classify", "--degree", "3", "--format", "xml"}).code == kExitUsage);
}

TEST_CASE("search exit codes") {
  auto r = run({"search", "++--+", "PNPN"});
  CHECK(r.code == kExitOk);
  const auto j = Json::parse(r.out);
  CHECK(j["result"]["status"] == "realized");
  const Couple c{parse_pattern("++--+"), ModuliOrder::parse("PNPN")};
  CHECK(validates(c, witness_from_json(j["result"]["witness"])));

  r = run({"search", "+++-", "NPN"});
  CHECK(r.code == kExitImpossible);
  CHECK(Json::parse(r.out)["result"]["filter"] == "canonical");

  r = run({"search", "++-", "PP"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("not compatible with Descartes' rule") != std::string::npos);
  CHECK(run({"search", "++x", "PP"}).code == kExitUsage);
}

TEST_CASE("verify suites") {
  CHECK(run({"verify", "counts", "--max-degree", "12"}).code == kExitOk);
  auto r = run({"verify", "resultants", "--max-degree", "6", "--trials", "100", "--seed", "7"});
  CHECK(r.code == kExitOk);
  const auto j = Json::parse(r.out);
  CHECK(j["factorization"][0]["constant"] == "-2");
  CHECK(j["factorization"][1]["constant"] == "4");
  CHECK(j["factorization"][2]["constant"] == "-8");
  CHECK(j["constant_discrepancy"]["informational"] == true);
  // Escalated, the disagreement with the stated constant fails.
  CHECK(run({"verify", "resultants", "--max-degree", "3", "--trials", "10", "--strict"}).code == kExitVerification);
  CHECK(run({"verify", "filters", "--samples", "2000", "--seed", "1"}).code == kExitOk);
  CHECK(run({"verify", "theorem1", "--degree", "4"}).code == kExitOk);
  CHECK(run({"verify", "nothing"}).code == kExitUsage);
}

TEST_CASE("output is identical across worker counts") {
  const auto a = run({"classify", "--degree", "4", "--jobs", "1"});
  const auto b = run({"classify", "--degree", "4", "--jobs", "3"});
  CHECK(a.out == b.out);
  const auto c = run({"verify", "filters", "--samples", "3000", "--jobs", "1"});
  const auto d = run({"verify", "filters", "--samples", "3000", "--jobs", "4"});
  CHECK(c.out == d.out);
}

TEST_CASE("witness files and --out") {
  const auto path = tmp("cli_search.json");
  CHECK(run({"search", "++--", "NPN", "--out", path.string()}).code == kExitOk);
  auto r = run({"witness", path.string()});
  CHECK(r.code == kExitOk);
  CHECK(Json::parse(r.out)["validates"] == true);

  const auto bad = tmp("cli_bad.json");
  std::ofstream(bad) << R"({"roots": ["1", "2"], "pattern": "+-+", "order": "PN"})";
  CHECK(run({"witness", bad.string()}).code == kExitVerification);
  std::ofstream(bad) << "not json";
  CHECK(run({"witness", bad.string()}).code == kExitUsage);
  CHECK(run({"witness", tmp("missing.json").string()}).code == kExitUsage);
}

TEST_CASE("config file, flags win") {
  const auto cfg = tmp("cli.ini");
  std::ofstream(cfg) << "degree = 2\nformat = md\n";
  auto r = run({"classify", "--config", cfg.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("## Degree 2") != std::string::npos);
  r = run({"classify", "--config", cfg.string(), "--degree", "3"});
  CHECK(r.out.find("## Degree 3") != std::string::npos);
}

TEST_CASE("counts") {
  auto r = run({"counts", "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 17);
}
