#include "descartes/cli.hpp"

#include "descartes/classification.hpp"
#include "descartes/counting.hpp"
#include "descartes/report.hpp"
#include "descartes/resultants.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <random>
#include <sstream>

namespace descartes {

namespace {

struct RunConfig {
  int degree = 0;  // 0: not given
  std::uint64_t seed = 1;
  long budget = 20000;
  int trials = 100;
  long samples = 100000;
  std::string format = "json";
  int max_degree = 0;  // 0: suite default
  int symbolic_bound = kDefaultSymbolicBound;
  bool strict = false;
  std::string out;
  int jobs = 0;

  SearchConfig search() const {
    SearchConfig s;
    s.seed = seed;
    s.budget = budget;
    return s;
  }

  // Worker count and output path do not influence results and are left out.
  Json to_json(const std::string& command) const {
    Json j;
    j["command"] = command;
    if (degree) j["degree"] = degree;
    j["seed"] = std::to_string(seed);
    j["budget"] = budget;
    j["trials"] = trials;
    j["samples"] = samples;
    if (max_degree) j["max_degree"] = max_degree;
    j["symbolic_bound"] = symbolic_bound;
    j["strict"] = strict;
    j["format"] = format;
    return j;
  }
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_classify(const RunConfig& cfg, std::string& text) {
  if (cfg.degree < 1 || cfg.degree > kCoupleEnumerationBound)
    throw UsageError("classify: --degree must be in [1, " + std::to_string(kCoupleEnumerationBound) + "]");
  const auto table = classify_degree(cfg.degree, cfg.search(), cfg.jobs);
  if (cfg.format == "csv") {
    text = table_csv(table);
  } else if (cfg.format == "md") {
    text = table_markdown(table);
  } else {
    Json j;
    j["config"] = cfg.to_json("classify");
    j["table"] = table_json(table);
    text = dump(j);
  }
  const bool ok = table.consistent() && (!table.fixture_available || table.matches_fixture());
  return ok ? kExitOk : kExitVerification;
}

int cmd_search(const RunConfig& cfg, const std::string& pattern_text, const std::string& order_text, std::string& text) {
  ChangePreservationPattern pattern;
  ModuliOrder order;
  try {
    pattern = parse_pattern(pattern_text);
    order = ModuliOrder::parse(order_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Couple couple{pattern, order};
  if (!couple.compatible())
    throw UsageError("couple (" + pattern_text + ", " + order_text + ") is not compatible with Descartes' rule: " +
                     std::to_string(pattern.count()) + " sign changes, " + std::to_string(order.count()) +
                     " positive roots, degrees " + std::to_string(pattern.size()) + " and " +
                     std::to_string(order.size()));
  const auto status = search_witness(couple, cfg.search());
  if (cfg.format == "json") {
    Json j;
    j["config"] = cfg.to_json("search");
    j["result"] = status_json(couple, status);
    text = dump(j);
  } else {
    std::ostringstream os;
    const char* sep = cfg.format == "csv" ? "," : " ";
    os << to_sign_pattern(pattern).str() << sep << order.str() << sep << status_name(status.status);
    if (status.filter) os << sep << filter_name(status.filter->id);
    if (status.witness) {
      os << sep;
      for (std::size_t i = 0; i < status.witness->roots.size(); ++i)
        os << (i ? " " : "") << to_string(status.witness->roots[i]);
    }
    os << "\n";
    text = os.str();
  }
  switch (status.status) {
    case Status::realized: return kExitOk;
    case Status::impossible: return kExitImpossible;
    case Status::unresolved: return kExitUnresolved;
  }
  return kExitUnresolved;
}

int verify_counts(const RunConfig& cfg, Json& report) {
  const int max_d = cfg.max_degree ? cfg.max_degree : 12;
  if (max_d < 1 || max_d > kEnumerationBound)
    throw UsageError("verify counts: --max-degree must be in [1, " + std::to_string(kEnumerationBound) + "]");
  bool ok = true;
  Json t_checks = Json::array();
  for (int d = 1; d <= max_d; ++d)
    for (int c = 0; 2 * c <= d; ++c) {
      const auto a = t_dc_closed(d, c), b = t_dc_catalan_sum(d, c), e = t_dc_bruteforce(d, c);
      const bool pass = a == b && b == e;
      ok = ok && pass;
      t_checks.push_back(Json{{"d", d}, {"c", c}, {"closed", to_string(a)}, {"catalan_sum", to_string(b)},
                              {"bruteforce", to_string(e)}, {"pass", pass}});
    }
  Json chi_checks = Json::array();
  for (int d = 1; d <= std::min(max_d, kCoupleEnumerationBound); ++d) {
    const auto a = chi(d), b = chi_by_enumeration(d);
    const bool pass = a == b && a == binomial(2 * d, d);
    ok = ok && pass;
    chi_checks.push_back(Json{{"d", d}, {"chi", to_string(a)}, {"enumerated", to_string(b)}, {"pass", pass}});
  }
  report["T"] = t_checks;
  report["chi"] = chi_checks;
  report["ratios"] = counts_json(max_d);
  report["ok"] = ok;
  return ok ? kExitOk : kExitVerification;
}

// R against the root product on random configurations, a few with an
// opposite pair so that R must vanish.
Json root_oracle(int d, std::uint64_t seed, bool& ok) {
  std::mt19937_64 rng(mix_seed(seed, 0xa11ce000ULL + static_cast<std::uint64_t>(d)));
  std::uniform_int_distribution<int> num(-12, 12), den(1, 4);
  int agree = 0, zero_cases = 0;
  const int runs = 10;
  for (int t = 0; t < runs; ++t) {
    RootConfiguration rc;
    for (int i = 0; i < d; ++i) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      rc.roots.push_back(q);
    }
    if (t % 3 == 2 && d >= 2) {
      rc.roots[1] = -rc.roots[0];
      ++zero_cases;
    }
    const auto poly = expand_from_roots(rc);
    std::vector<Rational> a(poly.coefficients.begin(), poly.coefficients.end() - 1);
    const Rational lhs = r_full_at(a), rhs = r_from_roots(rc.roots);
    if (lhs == rhs) ++agree;
  }
  ok = ok && agree == runs;
  return Json{{"d", d}, {"samples", runs}, {"agree", agree}, {"with_opposite_pair", zero_cases}};
}

int verify_resultants(const RunConfig& cfg, Json& report) {
  const int max_d = cfg.max_degree ? cfg.max_degree : 6;
  if (max_d < 1 || max_d > kMaxNumericDegree)
    throw UsageError("verify resultants: --max-degree must be in [1, " + std::to_string(kMaxNumericDegree) + "]");
  if (cfg.trials < 1) throw UsageError("verify resultants: --trials must be >= 1");
  if (cfg.symbolic_bound < 0 || cfg.symbolic_bound > kMaxVariables)
    throw UsageError("--symbolic-bound must be in [0, " + std::to_string(kMaxVariables) + "]");
  bool ok = true;

  // Closed forms for the first degrees.
  Json closed = Json::array();
  {
    const Poly a0 = coefficient_symbol(0), a1 = coefficient_symbol(1), a2 = coefficient_symbol(2);
    const std::vector<Poly> expected{Poly(-2) * a0, Poly(4) * a0 * a1 * a1,
                                     Poly(-8) * a0 * (a2 * a1 - a0) * (a2 * a1 - a0)};
    for (int d = 1; d <= 3 && d <= cfg.symbolic_bound; ++d) {
      const Poly r = r_full_symbolic(d, cfg.symbolic_bound);
      const bool pass = r == expected[static_cast<std::size_t>(d - 1)];
      ok = ok && pass;
      closed.push_back(Json{{"d", d}, {"R", r.str()}, {"pass", pass}});
    }
  }
  report["closed_forms"] = closed;

  Json fact = Json::array(), oracle = Json::array(), discrepancy = Json::array();
  for (int d = 1; d <= max_d; ++d) {
    const auto r = verify_factorization(d, cfg.trials, cfg.seed, cfg.symbolic_bound, cfg.jobs);
    ok = ok && r.ok(cfg.strict);
    fact.push_back(factorization_json(r));
    if (!r.matches_theorem)
      discrepancy.push_back(Json{{"d", d},
                                 {"observed", r.constant ? Json(to_string(*r.constant)) : Json(nullptr)},
                                 {"stated", to_string(r.theorem)}});
    if (d <= 12) oracle.push_back(root_oracle(d, cfg.seed, ok));
  }
  report["factorization"] = fact;
  report["root_product_oracle"] = oracle;
  report["constant_discrepancy"] = Json{{"informational", !cfg.strict}, {"degrees", discrepancy}};

  Json structural = Json::array(), traces = Json::array();
  for (int d = 1; d <= std::min(cfg.symbolic_bound, 8); ++d) {
    const auto s = structural_checks(d, cfg.symbolic_bound);
    ok = ok && s.ok();
    structural.push_back(structural_json(s));
  }
  for (int d = 1; d <= std::min({max_d, cfg.symbolic_bound, 6}); ++d) {
    const auto t = block_reduction_trace(d, cfg.symbolic_bound);
    ok = ok && t.ok() && (!cfg.strict || t.factor_matches());
    traces.push_back(trace_json(t));
  }
  report["structural"] = structural;
  report["block_reduction"] = traces;
  report["ok"] = ok;
  return ok ? kExitOk : kExitVerification;
}

int verify_theorem1(const RunConfig& cfg, Json& report) {
  std::vector<int> degrees;
  if (cfg.degree) {
    degrees.push_back(cfg.degree);
  } else {
    for (int d = 1; d <= (cfg.max_degree ? cfg.max_degree : 7); ++d) degrees.push_back(d);
  }
  bool ok = true;
  Json parts = Json::array();
  for (int d : degrees) {
    if (d < 1 || d > kCoupleEnumerationBound)
      throw UsageError("verify theorem1: degree must be in [1, " + std::to_string(kCoupleEnumerationBound) + "]");
    const auto r = theorem1_report(d, cfg.search(), cfg.jobs);
    ok = ok && r.ok();
    parts.push_back(theorem1_json(r));
  }
  report["degrees"] = parts;
  report["ok"] = ok;
  return ok ? kExitOk : kExitVerification;
}

int verify_filters(const RunConfig& cfg, Json& report) {
  const int max_d = cfg.max_degree ? cfg.max_degree : 10;
  if (max_d < 1 || max_d > 24) throw UsageError("verify filters: --max-degree must be in [1, 24]");
  if (cfg.samples < 1) throw UsageError("verify filters: --samples must be >= 1");
  const auto r = fuzz_filter_soundness(cfg.samples, cfg.seed, max_d, cfg.jobs);
  report["fuzz"] = fuzz_json(r);
  report["ok"] = r.ok();
  return r.ok() ? kExitOk : kExitVerification;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, std::string& text) {
  Json report;
  report["config"] = cfg.to_json("verify " + suite);
  int code = kExitOk;
  if (suite == "counts")
    code = verify_counts(cfg, report);
  else if (suite == "resultants")
    code = verify_resultants(cfg, report);
  else if (suite == "theorem1")
    code = verify_theorem1(cfg, report);
  else if (suite == "filters")
    code = verify_filters(cfg, report);
  else
    throw UsageError("unknown suite " + suite);
  text = dump(report);
  return code;
}

int cmd_counts(const RunConfig& cfg, std::string& text) {
  const int max_d = cfg.max_degree ? cfg.max_degree : 16;
  if (max_d < 1 || max_d > 64) throw UsageError("counts: --max-degree must be in [1, 64]");
  if (cfg.format == "csv")
    text = counts_csv(max_d);
  else if (cfg.format == "md")
    text = counts_markdown(max_d);
  else
    text = dump(counts_json(max_d));
  return kExitOk;
}

// Accepts a bare array of roots, or an object with "roots" or "witness" and
// optionally "pattern"/"order" to check against. The output of `search` and
// the entries of a classification table are accepted as they are.
int cmd_witness(const RunConfig& cfg, const std::string& path, std::string& text) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("result")) doc = doc["result"];
  Json roots = doc;
  std::optional<Couple> expected;
  if (doc.is_object()) {
    if (doc.contains("roots"))
      roots = doc["roots"];
    else if (doc.contains("witness"))
      roots = doc["witness"];
    else
      throw UsageError("witness object needs a \"roots\" or \"witness\" array");
    if (doc.contains("pattern") && doc.contains("order")) {
      try {
        expected = Couple{parse_pattern(doc["pattern"].get<std::string>()),
                          ModuliOrder::parse(doc["order"].get<std::string>())};
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
    }
  }
  RootConfiguration rc;
  try {
    rc = witness_from_json(roots);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Json j;
  j["config"] = cfg.to_json("witness");
  j["witness"] = witness_json(rc);
  int code = kExitOk;
  try {
    const auto couple = couple_of(rc);
    j["pattern"] = to_sign_pattern(couple.pattern).str();
    j["cpp"] = couple.pattern.str();
    j["order"] = couple.order.str();
    j["polynomial"] = expand_from_roots(rc).str();
    if (expected) {
      const bool match = validates(*expected, rc);
      j["expected"] = expected->str();
      j["validates"] = match;
      if (!match) code = kExitVerification;
    }
  } catch (const RealizationError& e) {
    j["error"] = e.what();
    code = kExitVerification;
  }
  text = dump(j);
  return code;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string pattern_text, order_text, suite, witness_path;

  CLI::App app{"Sign patterns, orders of moduli and resultants of hyperbolic polynomials", "descartes"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value file mirroring the long flags; flags win");
  app.add_option("--degree", cfg.degree, "polynomial degree");
  app.add_option("--seed", cfg.seed, "master seed");
  app.add_option("--budget", cfg.budget, "random-search evaluations per orbit")->check(CLI::NonNegativeNumber);
  app.add_option("--trials", cfg.trials, "random points per degree (resultants)");
  app.add_option("--samples", cfg.samples, "random root configurations (filters)");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "md"}));
  app.add_option("--max-degree", cfg.max_degree, "largest degree of a verification suite");
  app.add_option("--symbolic-bound", cfg.symbolic_bound, "largest degree expanded symbolically");
  app.add_flag("--strict", cfg.strict, "treat disagreements with stated constants as failures");
  app.add_option("--out", cfg.out, "write the artifact here instead of stdout");
  app.add_option("--jobs", cfg.jobs, "worker threads (0: all cores); never changes output");

  auto* classify = app.add_subcommand("classify", "classify every compatible couple of a degree");
  auto* search = app.add_subcommand("search", "decide one couple");
  search->add_option("pattern", pattern_text, "sign pattern (+/-) or change-preservation pattern (c/p)")->required();
  search->add_option("order", order_text, "order of moduli (P/N)")->required();
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "counts | resultants | theorem1 | filters")
      ->required()
      ->check(CLI::IsMember({"counts", "resultants", "theorem1", "filters"}));
  auto* counts = app.add_subcommand("counts", "tabulate chi(d), T_d^c and the leading-sum ratio");
  auto* witness = app.add_subcommand("witness", "re-validate a witness from a JSON file");
  witness->add_option("file", witness_path, "JSON witness")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::string text;
  int code = kExitOk;
  try {
    if (*classify)
      code = cmd_classify(cfg, text);
    else if (*search)
      code = cmd_search(cfg, pattern_text, order_text, text);
    else if (*verify)
      code = cmd_verify(cfg, suite, text);
    else if (*counts)
      code = cmd_counts(cfg, text);
    else if (*witness)
      code = cmd_witness(cfg, witness_path, text);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (cfg.out.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << cfg.out << "\n";
      return kExitUsage;
    }
    f << text;
  }
  return code;
}

}  // namespace descartes
