#include "descartes/classification.hpp"

#include "descartes/fixtures.hpp"
#include "descartes/parallel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace descartes {

ClassificationTable classify_degree(int d, const SearchConfig& cfg, int jobs) {
  if (d < 1 || d > kCoupleEnumerationBound)
    throw std::invalid_argument("classify: degree must be in [1, " + std::to_string(kCoupleEnumerationBound) + "]");

  const auto couples = compatible_couples(d);
  std::vector<Couple> reps;
  for (const auto& c : couples)
    if (orbit(c).front() == c) reps.push_back(c);

  std::vector<RealizationStatus> rep_status(reps.size());
  parallel_for(reps.size(), jobs, [&](std::size_t i) { rep_status[i] = search_witness(reps[i], cfg); });

  std::map<Couple, std::size_t> rep_index;
  for (std::size_t i = 0; i < reps.size(); ++i) rep_index.emplace(reps[i], i);

  ClassificationTable t;
  t.degree = d;
  t.chi = chi(d);
  for (const auto& c : couples) {
    const auto i = rep_index.at(orbit(c).front());
    CoupleRecord r{c, transport_status(rep_status[i], reps[i], c), std::nullopt};
    switch (r.status.status) {
      case Status::realized:
        ++t.realized;
        r.contradicting_filter = apply_filters(c);
        if (r.contradicting_filter) ++t.soundness_violations;
        break;
      case Status::impossible: ++t.impossible; break;
      case Status::unresolved: ++t.unresolved; break;
    }
    t.records.push_back(std::move(r));
  }
  if (BigCount(static_cast<long>(couples.size())) != t.chi)
    throw std::logic_error("enumerated couples do not add up to chi(d)");
  t.lower = Rational(Integer(t.realized), t.chi);
  t.lower.canonicalize();
  t.upper = Rational(t.chi - t.impossible, t.chi);
  t.upper.canonicalize();

  if (has_fixture(d)) {
    t.fixture_available = true;
    const auto truth = fixture_realizable(d);
    const std::set<Couple> truth_set(truth.begin(), truth.end());
    for (const auto& r : t.records) {
      const bool is_real = r.status.status == Status::realized;
      const bool should = truth_set.count(r.couple) > 0;
      if (should && !is_real) t.missing.push_back(r.couple);
      if (!should && is_real) t.spurious.push_back(r.couple);
    }
  }
  return t;
}

std::vector<PatternStars> pattern_stars(const ClassificationTable& table) {
  std::map<SignPattern, StarCount> acc;
  for (const auto& r : table.records) {
    auto& s = acc[to_sign_pattern(r.couple.pattern)];
    if (r.status.status == Status::realized) ++s.lower;
    if (r.status.status != Status::impossible) ++s.upper;
  }
  std::vector<PatternStars> out;
  for (const auto& [sp, s] : acc) out.push_back({sp, s});
  return out;
}

SignPattern sigma(const std::vector<int>& runs) {
  std::string text;
  char sign = '+';
  for (int r : runs) {
    if (r < 1) throw std::invalid_argument("Sigma: run lengths must be >= 1");
    text.append(static_cast<std::size_t>(r), sign);
    sign = sign == '+' ? '-' : '+';
  }
  return SignPattern::parse(text);
}

std::vector<SignPattern> pattern_orbit(const SignPattern& sp) {
  const auto m = apply(sp, Involution::mirror);
  std::vector<SignPattern> out{sp, m, apply(sp, Involution::reverse), apply(m, Involution::reverse)};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::failed: return "failed";
    case Verdict::unverifiable: return "unverifiable";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "unknown";
}

bool Theorem1Report::ok() const {
  return std::none_of(parts.begin(), parts.end(), [](const TheoremPart& p) { return p.verdict == Verdict::failed; });
}

FamilyCoverage square_family_coverage(int d) {
  if (d < 2) throw std::invalid_argument("(x+1)^{d-2}(x-1)^2 needs d >= 2");
  std::vector<RootCluster> base{{Rational(-1), d - 2}, {Rational(1), 2}};
  if (d == 2) base.erase(base.begin());
  std::uint32_t negative = 0;
  for (int i = 0; i <= d; ++i)
    if (square_family_coefficient(d, d - i) <= 0) negative |= 1U << i;  // vanishing ones taken as '-'
  FamilyCoverage out{SignPattern(d, negative), 0, 0, {}};
  const auto cpp = to_change_preservation(out.pattern);
  for (const auto& order : orders_with_positives(d, 2)) {
    ++out.total;
    try {
      out.witnesses.push_back(perturb_multiple_roots(base, {cpp, order}));
      ++out.realized;
    } catch (const RealizationError&) {
    }
  }
  return out;
}

namespace {

TheoremPart part1(int d) {
  TheoremPart p{1, "only the constant orders are realizable with every compatible pattern", Verdict::verified, ""};
  if (d > kCoupleEnumerationBound) {
    p.verdict = Verdict::unverifiable;
    p.detail = "degree beyond enumeration bound";
    return p;
  }
  long universal = 0;
  for (int c = 0; c <= d; ++c) {
    for (const auto& order : orders_with_positives(d, c)) {
      const bool constant = c == 0 || c == d;
      bool excluded = false;
      for (const auto& cpp : patterns_with_changes(d, c))
        if (apply_filters({cpp, order})) {
          excluded = true;
          break;
        }
      if (constant) {
        // c^d / p^d is the only compatible pattern and the canonical construction realizes it.
        const auto cpp = patterns_with_changes(d, c).front();
        if (excluded || !validates({cpp, order}, construct_canonical_witness(cpp))) {
          p.verdict = Verdict::failed;
          p.detail = "constant order " + order.str() + " not realized";
          return p;
        }
        ++universal;
      } else if (!excluded) {
        p.verdict = Verdict::failed;
        p.detail = "no compatible pattern of " + order.str() + " is excluded by a filter";
        return p;
      }
    }
  }
  p.detail = std::to_string(universal) + " universal orders; every other order has an excluded pattern";
  return p;
}

TheoremPart part2(int d) {
  TheoremPart p{2, "a pattern realizable with all compatible orders exists (c = 2 when d >= 5)", Verdict::verified, ""};
  if (d < 5) {
    const SignPattern all_plus(d, 0);
    const auto ok = validates({to_change_preservation(all_plus), ModuliOrder(d, 0)},
                              construct_canonical_witness(to_change_preservation(all_plus)));
    p.verdict = ok ? Verdict::verified : Verdict::failed;
    p.detail = all_plus.str() + " with its only order " + ModuliOrder(d, 0).str();
    return p;
  }
  const auto cov = square_family_coverage(d);
  p.verdict = cov.realized == cov.total ? Verdict::verified : Verdict::failed;
  p.detail = cov.pattern.str() + " from (x+1)^" + std::to_string(d - 2) + "(x-1)^2 realized with " +
             std::to_string(cov.realized) + "/" + std::to_string(cov.total) + " orders";
  return p;
}

}  // namespace

Theorem1Report theorem1_report(int d, const SearchConfig& cfg, int jobs) {
  if (d < 1) throw std::invalid_argument("theorem1: degree must be >= 1");
  Theorem1Report rep;
  rep.degree = d;
  rep.parts.push_back(part1(d));
  rep.parts.push_back(part2(d));

  TheoremPart p3{3, "no sign pattern has k* = 2", Verdict::unverifiable, "needs a fixture-validated table (d <= 5)"};
  TheoremPart p4{4, "k* = 3 exactly on the orbit of Sigma_{2,d-1}", Verdict::unverifiable, p3.detail};
  TheoremPart p7{7, "k*(Sigma_{m,n}) = 2 min(m,n) - 1 with lower = upper", Verdict::unverifiable, p3.detail};
  if (has_fixture(d)) {
    const auto table = classify_degree(d, cfg, jobs);
    if (!table.matches_fixture() || !table.consistent()) {
      p3.detail = p4.detail = p7.detail = "classification does not match the fixture";
      p3.verdict = p4.verdict = p7.verdict = Verdict::failed;
    } else {
      // Fixture match pins the realizable set, so lower bounds are exact k*.
      const auto stars = pattern_stars(table);
      std::vector<SignPattern> twos, threes;
      for (const auto& s : stars) {
        if (s.stars.lower == 2) twos.push_back(s.pattern);
        if (s.stars.lower == 3) threes.push_back(s.pattern);
      }
      p3.verdict = twos.empty() ? Verdict::verified : Verdict::failed;
      p3.detail = std::to_string(twos.size()) + " patterns with k* = 2";
      std::vector<SignPattern> expected;
      if (d >= 3) expected = pattern_orbit(sigma({2, d - 1}));
      p4.verdict = threes == expected ? Verdict::verified : Verdict::failed;
      p4.detail = std::to_string(threes.size()) + " patterns with k* = 3, expected " + std::to_string(expected.size());

      std::string detail;
      bool all = true;
      for (int m = 1; m <= d; ++m) {
        const int n = d + 1 - m;
        const auto sp = sigma({m, n});
        const auto it = std::find_if(stars.begin(), stars.end(), [&](const PatternStars& s) { return s.pattern == sp; });
        const int want = 2 * std::min(m, n) - 1;
        const bool good = it != stars.end() && it->stars.lower == want && it->stars.upper == want;
        all = all && good;
        if (!detail.empty()) detail += ", ";
        detail += "(" + std::to_string(m) + "," + std::to_string(n) + "):" +
                  (it == stars.end() ? std::string("?")
                                     : std::to_string(it->stars.lower) + ".." + std::to_string(it->stars.upper));
      }
      p7.verdict = all ? Verdict::verified : Verdict::failed;
      p7.detail = detail;
    }
  }
  rep.parts.push_back(p3);
  rep.parts.push_back(p4);

  TheoremPart p5{5, "l*(PN...N) = d/2 for even d", Verdict::not_applicable, "odd degree"};
  if (d % 2 == 0) {
    const ModuliOrder order(d, 1U);
    const auto s = star_counts(order, cfg);
    const int want = d / 2;
    if (s.lower == want && s.upper == want)
      p5.verdict = Verdict::verified;
    else if (s.lower <= want && want <= s.upper)
      p5.verdict = Verdict::unverifiable;
    else
      p5.verdict = Verdict::failed;
    p5.detail = "l*(" + order.str() + ") in [" + std::to_string(s.lower) + ", " + std::to_string(s.upper) + "]";
  }
  rep.parts.push_back(p5);

  if (d == 6) {
    TheoremPart p6{6, "k*(Sigma_{3,3,1}) = 6", Verdict::verified, ""};
    const auto s = star_counts(sigma({3, 3, 1}), cfg);
    if (s.lower == 6)
      p6.verdict = Verdict::verified;
    else if (s.lower < 6 && s.upper >= 6)
      p6.verdict = Verdict::unverifiable;
    else
      p6.verdict = Verdict::failed;
    p6.detail = "k* in [" + std::to_string(s.lower) + ", " + std::to_string(s.upper) + "]";
    rep.parts.push_back(p6);
  }
  if (has_fixture(d)) rep.parts.push_back(p7);
  return rep;
}

}  // namespace descartes
