#pragma once

#include "descartes/counting.hpp"
#include "descartes/realization.hpp"

#include <optional>
#include <string>
#include <vector>

namespace descartes {

struct CoupleRecord {
  Couple couple;
  RealizationStatus status;
  // A filter verdict on a couple that also has a witness; any such entry is a bug.
  std::optional<FilterVerdict> contradicting_filter;
};

struct ClassificationTable {
  int degree = 0;
  std::vector<CoupleRecord> records;  // sorted by couple
  long realized = 0;
  long impossible = 0;
  long unresolved = 0;
  BigCount chi;
  Rational lower;  // realized / chi
  Rational upper;  // (chi - impossible) / chi

  bool fixture_available = false;
  std::vector<Couple> missing;   // fixture-realizable, no witness found
  std::vector<Couple> spurious;  // witness found, fixture says non-realizable
  long soundness_violations = 0;

  bool matches_fixture() const { return fixture_available && missing.empty() && spurious.empty(); }
  bool consistent() const { return soundness_violations == 0 && spurious.empty(); }
};

// Every compatible couple of degree d; one search per orbit. jobs <= 0 picks
// the hardware concurrency. Output does not depend on jobs.
ClassificationTable classify_degree(int d, const SearchConfig& cfg, int jobs = 0);

// k* per sign pattern read from a table.
struct PatternStars {
  SignPattern pattern;
  StarCount stars;
};
std::vector<PatternStars> pattern_stars(const ClassificationTable& table);

// Sigma_{i1,i2,...}: i1 signs '+', then i2 signs '-', and so on.
SignPattern sigma(const std::vector<int>& runs);

// Sign patterns in the orbit of a pattern under mirror and reverse.
std::vector<SignPattern> pattern_orbit(const SignPattern& sp);

enum class Verdict { verified, failed, unverifiable, not_applicable };
std::string_view verdict_name(Verdict v);

struct TheoremPart {
  int part = 0;
  std::string claim;
  Verdict verdict = Verdict::unverifiable;
  std::string detail;
};

struct Theorem1Report {
  int degree = 0;
  std::vector<TheoremPart> parts;
  bool ok() const;
};

// Parts 3 and 4 need a fixture-validated table (d <= 5); above that they are
// reported as unverifiable. Extra checks for the Sigma_{3,3,1} and
// Sigma_{m,n} star counts are appended as parts 6 and 7 where they apply.
Theorem1Report theorem1_report(int d, const SearchConfig& cfg, int jobs = 0);

// Part (2) directly: realizes the pattern of (x+1)^{d-2}(x-1)^2 with every
// compatible order by perturbation. Returns the number of orders realized.
struct FamilyCoverage {
  SignPattern pattern;
  long realized = 0;
  long total = 0;
  std::vector<RootConfiguration> witnesses;
};
FamilyCoverage square_family_coverage(int d);

}  // namespace descartes
