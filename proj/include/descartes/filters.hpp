#pragma once

#include "descartes/patterns.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace descartes {

// Named non-realizability criteria. Each one is a theorem, never a failed search.
enum class FilterId {
  leading_sum,    // interlacing moduli force a_{d-1} > 0
  even_degree,    // even d, odd coefficients negative: no negative modulus in certain gaps
  canonical,      // canonical patterns only go with their canonical order
  rigid,          // rigid orders force one sign pattern
  superposition,  // interleaving two alternating orders forces every other sign
  single_change,  // c = 1: bounds on negative moduli on the short side of the positive root
  two_change,     // d = 8k+2, c = 2, order N^{4k} PP N^{4k}
};

std::string_view filter_name(FilterId id);
std::optional<FilterId> parse_filter_name(std::string_view name);

// Filters that lean on an external theorem rather than an argument carried out
// here; their rejections are tagged separately in reports.
bool is_cited_result(FilterId id);

struct FilterVerdict {
  FilterId id;
  std::string detail;
  // Set when the verdict came from an involution image of the couple.
  std::optional<Couple> via;
};

// Checks a single couple against one criterion, without involutions.
std::optional<std::string> check_filter(FilterId id, const Couple& couple);

// All criteria in order on the couple itself, then on its orbit images.
// Returns the first hit.
std::optional<FilterVerdict> apply_filters(const Couple& couple);

const std::vector<FilterId>& all_filters();

}  // namespace descartes
