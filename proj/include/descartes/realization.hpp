#pragma once

#include "descartes/filters.hpp"
#include "descartes/numeric.hpp"
#include "descartes/patterns.hpp"
#include "descartes/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace descartes {

struct SearchConfig {
  std::uint64_t seed = 1;
  // Objective evaluations spent by the randomized stage, per orbit.
  long budget = 20000;
  Rational base = 2;
  // Smallest relative gap between consecutive moduli is about base^-spread.
  int spread = 12;
};

enum class Status { realized, impossible, unresolved };

std::string_view status_name(Status s);

struct RealizationStatus {
  Status status = Status::unresolved;
  std::optional<RootConfiguration> witness;
  std::optional<FilterVerdict> filter;
  // Which construction produced the witness ("canonical", "cluster", "random").
  std::string strategy;
};

// True iff the roots are a valid witness for the couple (exact).
bool validates(const Couple& couple, const RootConfiguration& rc);

// Moduli base, base^2, ..., base^d with signs from the canonical order.
// Squares the base and retries until the expansion validates.
RootConfiguration construct_canonical_witness(const ChangePreservationPattern& cpp, const Rational& base = 2);

struct RootCluster {
  Rational value;  // signed root; clusters sharing |value| form one modulus block
  int multiplicity = 1;
};

struct PerturbConfig {
  Rational radius = Rational(1, 4);
  // Give up once the relative spread drops below 2^-min_exponent.
  int min_exponent = 40;
  // Spacing layouts tried per radius (the first is evenly spaced).
  int layouts = 6;
  std::uint64_t seed = 1;
};

// Splits multiple roots into nearby distinct ones realizing target.order and
// shrinks the spread until target.pattern appears. Throws RealizationError
// (not_achievable, budget_exhausted).
RootConfiguration perturb_multiple_roots(const std::vector<RootCluster>& base, const Couple& target,
                                         const PerturbConfig& cfg = {});

// Base root multisets tried by the search for a couple: (x+1)^p (x-1)^c and
// the same cluster with one positive or negative outlier of modulus 1/10.
std::vector<std::vector<RootCluster>> cluster_families(const Couple& couple);

// Randomized exact-rational search in log-modulus space. nullopt on budget exhaustion.
std::optional<RootConfiguration> random_search(const Couple& couple, const SearchConfig& cfg, std::uint64_t seed);

// Canonical construction, cluster perturbations, then random search, all on
// the orbit representative; the witness is carried back through the involutions.
// Falls back to apply_filters, then Unresolved.
RealizationStatus search_witness(const Couple& couple, const SearchConfig& cfg);

// Status of `from` restated for another member `to` of its orbit: the
// witness is carried through the involutions, filters are re-run on `to`.
RealizationStatus transport_status(const RealizationStatus& s, const Couple& from, const Couple& to);

struct StarCount {
  int lower = 0;
  int upper = 0;
};

// k*(pattern): orders realizing it; l*(order): patterns realized with it.
StarCount star_counts(const SignPattern& target, const SearchConfig& cfg);
StarCount star_counts(const ModuliOrder& target, const SearchConfig& cfg);

// Property check of the filters: random root configurations must never be
// declared impossible, and every sample must obey Descartes' rule exactly.
struct FuzzReport {
  long samples = 0;
  long skipped = 0;  // some expanded coefficient vanished; no sign pattern
  long descartes_failures = 0;
  long impossible_verdicts = 0;
  std::vector<long> per_degree;  // checked samples by degree, index = d
  std::vector<std::string> failures;  // first few offending couples
  bool ok() const { return descartes_failures == 0 && impossible_verdicts == 0; }
};

FuzzReport fuzz_filter_soundness(long samples, std::uint64_t seed, int max_degree = 10, int jobs = 0);

// Coefficient of x^k in (x+1)^{d-2}(x-1)^2, by the closed form.
Integer square_family_coefficient(int d, int k);

}  // namespace descartes
