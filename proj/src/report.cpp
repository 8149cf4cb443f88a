#include "descartes/report.hpp"

#include "descartes/counting.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

namespace descartes {

std::string fixed(double x, int digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, digits);
  return std::string(buf, res.ptr);
}

Json witness_json(const RootConfiguration& rc) {
  Json j = Json::array();
  for (const auto& r : rc.roots) j.push_back(to_string(r));
  return j;
}

RootConfiguration witness_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("witness must be a JSON array of rationals");
  RootConfiguration rc;
  for (const auto& x : j) {
    if (x.is_string())
      rc.roots.push_back(parse_rational(x.get<std::string>()));
    else if (x.is_number_integer())
      rc.roots.emplace_back(x.get<long>());
    else
      throw std::invalid_argument("witness entries must be strings such as \"3/2\" or integers");
  }
  if (rc.roots.empty()) throw std::invalid_argument("witness is empty");
  return rc;
}

Json status_json(const Couple& couple, const RealizationStatus& s) {
  Json j;
  j["pattern"] = to_sign_pattern(couple.pattern).str();
  j["cpp"] = couple.pattern.str();
  j["order"] = couple.order.str();
  j["status"] = std::string(status_name(s.status));
  if (s.witness) {
    j["witness"] = witness_json(*s.witness);
    j["strategy"] = s.strategy;
    j["polynomial"] = expand_from_roots(*s.witness).str();
  }
  if (s.filter) {
    j["filter"] = std::string(filter_name(s.filter->id));
    if (is_cited_result(s.filter->id)) j["cited_result"] = true;
    j["reason"] = s.filter->detail;
  }
  return j;
}

Json table_json(const ClassificationTable& t) {
  Json j;
  j["degree"] = t.degree;
  Json summary;
  summary["compatible"] = to_string(t.chi);
  summary["realized"] = t.realized;
  long half = 0;  // a_{d-1} > 0, i.e. the pattern opens with a preservation
  for (const auto& r : t.records)
    if (r.status.status == Status::realized && r.couple.pattern.size() > 0 && !r.couple.pattern.test(0)) ++half;
  summary["realized_positive_half"] = half;
  summary["impossible"] = t.impossible;
  summary["unresolved"] = t.unresolved;
  summary["ratio_lower"] = to_string(t.lower);
  summary["ratio_upper"] = to_string(t.upper);
  summary["soundness_violations"] = t.soundness_violations;
  long cited = 0;
  for (const auto& r : t.records)
    if (r.status.filter && is_cited_result(r.status.filter->id)) ++cited;
  summary["cited_result_rejections"] = cited;
  if (t.fixture_available) {
    Json fx;
    fx["matches"] = t.matches_fixture();
    Json missing = Json::array(), spurious = Json::array();
    for (const auto& c : t.missing) missing.push_back(c.str());
    for (const auto& c : t.spurious) spurious.push_back(c.str());
    fx["missing"] = missing;
    fx["spurious"] = spurious;
    summary["fixture"] = fx;
  }
  j["summary"] = summary;
  Json couples = Json::array();
  for (const auto& r : t.records) {
    Json c = status_json(r.couple, r.status);
    if (r.contradicting_filter) c["contradicting_filter"] = std::string(filter_name(r.contradicting_filter->id));
    couples.push_back(std::move(c));
  }
  j["couples"] = couples;
  return j;
}

std::string table_csv(const ClassificationTable& t) {
  std::ostringstream os;
  os << "pattern,cpp,order,status,filter,witness\n";
  for (const auto& r : t.records) {
    os << to_sign_pattern(r.couple.pattern).str() << ',' << r.couple.pattern.str() << ',' << r.couple.order.str() << ','
       << status_name(r.status.status) << ',';
    if (r.status.filter) os << filter_name(r.status.filter->id);
    os << ',';
    if (r.status.witness) {
      os << '"';
      for (std::size_t i = 0; i < r.status.witness->roots.size(); ++i)
        os << (i ? " " : "") << to_string(r.status.witness->roots[i]);
      os << '"';
    }
    os << '\n';
  }
  return os.str();
}

std::string table_markdown(const ClassificationTable& t) {
  struct Row {
    std::vector<std::string> realized, impossible, open;
  };
  std::map<Couple, Row> rows;  // keyed by (pattern, first order) for stable sorting
  std::map<SignPattern, Couple> first;
  for (const auto& r : t.records) {
    const auto sp = to_sign_pattern(r.couple.pattern);
    const auto key = first.emplace(sp, r.couple).first->second;
    auto& row = rows[key];
    const auto o = r.couple.order.str();
    switch (r.status.status) {
      case Status::realized: row.realized.push_back(o); break;
      case Status::impossible: row.impossible.push_back(o + " (" + std::string(filter_name(r.status.filter->id)) + ")"); break;
      case Status::unresolved: row.open.push_back(o); break;
    }
  }
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
    return s;
  };
  std::ostringstream os;
  os << "## Degree " << t.degree << "\n\n";
  os << "| c | sign pattern | realizable orders | non-realizable orders | unresolved | k* |\n";
  os << "|---|---|---|---|---|---|\n";
  for (const auto& [key, row] : rows) {
    const auto n = row.realized.size() + row.impossible.size() + row.open.size();
    os << "| " << key.pattern.count() << " | " << to_sign_pattern(key.pattern).str() << " | " << join(row.realized)
       << " | " << join(row.impossible) << " | " << join(row.open) << " | " << row.realized.size() << "/" << n << " |\n";
  }
  os << "\nrealized " << t.realized << ", impossible " << t.impossible << ", unresolved " << t.unresolved << " of "
     << to_string(t.chi) << "; ratio in [" << to_string(t.lower) << ", " << to_string(t.upper) << "]\n";
  if (t.fixture_available) os << "fixture: " << (t.matches_fixture() ? "match" : "MISMATCH") << "\n";
  return os.str();
}

namespace {

struct CountsRow {
  int d;
  BigCount chi;
  std::vector<BigCount> t;
  BigCount excluded;
  double ratio;
};

std::vector<CountsRow> counts_rows(int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("max degree must be >= 1");
  std::vector<CountsRow> rows;
  for (int d = 1; d <= max_degree; ++d) {
    CountsRow r{d, chi(d), {}, leading_sum_excluded(d), 0.0};
    for (int c = 0; 2 * c <= d; ++c) r.t.push_back(t_dc_closed(d, c));
    r.ratio = Rational(r.excluded, r.chi).get_d();
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

Json counts_json(int max_degree) {
  Json rows = Json::array();
  for (const auto& r : counts_rows(max_degree)) {
    Json j;
    j["degree"] = r.d;
    j["chi"] = to_string(r.chi);
    Json t = Json::array();
    for (const auto& x : r.t) t.push_back(to_string(x));
    j["T"] = t;
    j["leading_sum_excluded"] = to_string(r.excluded);
    j["excluded_ratio"] = fixed(r.ratio);
    rows.push_back(std::move(j));
  }
  Json out;
  out["note"] = "excluded_ratio is tabulated for illustration only";
  out["rows"] = rows;
  return out;
}

std::string counts_csv(int max_degree) {
  std::ostringstream os;
  os << "degree,chi,T,leading_sum_excluded,excluded_ratio\n";
  for (const auto& r : counts_rows(max_degree)) {
    os << r.d << ',' << to_string(r.chi) << ",\"";
    for (std::size_t i = 0; i < r.t.size(); ++i) os << (i ? " " : "") << to_string(r.t[i]);
    os << "\"," << to_string(r.excluded) << ',' << fixed(r.ratio) << '\n';
  }
  return os.str();
}

std::string counts_markdown(int max_degree) {
  std::ostringstream os;
  os << "| d | chi(d) | T_d^c, c = 0.. | excluded by leading sum | ratio |\n|---|---|---|---|---|\n";
  for (const auto& r : counts_rows(max_degree)) {
    os << "| " << r.d << " | " << to_string(r.chi) << " | ";
    for (std::size_t i = 0; i < r.t.size(); ++i) os << (i ? ", " : "") << to_string(r.t[i]);
    os << " | " << to_string(r.excluded) << " | " << fixed(r.ratio) << " |\n";
  }
  return os.str();
}

Json factorization_json(const FactorizationReport& r) {
  Json j;
  j["degree"] = r.degree;
  j["trials"] = r.trials;
  j["degenerate_resampled"] = r.degenerate;
  j["constant"] = r.constant ? Json(to_string(*r.constant)) : Json(nullptr);
  j["single_constant"] = r.single_constant;
  j["power_of_two"] = r.power_of_two;
  j["sign"] = r.sign;
  j["exponent"] = r.exponent;
  j["symbolic_checked"] = r.symbolic_checked;
  j["symbolic_identity"] = r.symbolic_identity;
  Json th;
  th["stated_constant"] = to_string(r.theorem);
  th["matches"] = r.matches_theorem;
  th["informational"] = true;
  j["theorem_constant"] = th;
  return j;
}

Json structural_json(const StructuralReport& r) {
  Json j;
  j["degree"] = r.degree;
  j["terms"] = r.terms;
  j["weight"] = r.weight;
  j["monomial_weights"] = r.monomial_weights;
  j["quasi_homogeneous"] = r.quasi_homogeneous;
  j["extremal"] = Json{{r.extremal_a, r.extremal_a_present}, {r.extremal_b, r.extremal_b_present}};
  j["caps_respected"] = r.caps_respected;
  j["ok"] = r.ok();
  return j;
}

Json trace_json(const BlockReductionTrace& t) {
  Json j;
  j["degree"] = t.degree;
  j["permutation_sign"] = t.permutation_sign;
  j["permutation_keeps_sign"] = t.permutation_sign == 1;
  j["block_diagonal"] = t.block_diagonal;
  j["pivot_factor"] = t.pivot_factor.str();
  j["stated_factor"] = t.expected_factor.str();
  j["factor_matches"] = t.factor_matches();
  j["delta_blocks_match"] = t.delta_blocks_match;
  j["det_b_equals_det_a"] = t.det_b_equals_det_a;
  j["det_c_equals_sign_det_b"] = t.det_c_equals_sign_det_b;
  j["det_c_equals_factor_delta"] = t.det_c_equals_factor_delta;
  j["equals_r_full"] = t.equals_r_full;
  j["symbolic_determinants"] = t.symbolic_determinants;
  if (t.degree <= 4) {
    j["b"] = render(t.b);
    j["c"] = render(t.c);
  }
  j["ok"] = t.ok();
  return j;
}

Json theorem1_json(const Theorem1Report& r) {
  Json j;
  j["degree"] = r.degree;
  Json parts = Json::array();
  for (const auto& p : r.parts)
    parts.push_back(Json{{"part", p.part}, {"claim", p.claim}, {"verdict", std::string(verdict_name(p.verdict))},
                         {"detail", p.detail}});
  j["parts"] = parts;
  j["ok"] = r.ok();
  return j;
}

Json fuzz_json(const FuzzReport& r) {
  Json j;
  j["samples"] = r.samples;
  j["skipped_zero_coefficient"] = r.skipped;
  j["checked_per_degree"] = r.per_degree;
  j["descartes_failures"] = r.descartes_failures;
  j["impossible_verdicts"] = r.impossible_verdicts;
  j["failures"] = r.failures;
  j["ok"] = r.ok();
  return j;
}

}  // namespace descartes
