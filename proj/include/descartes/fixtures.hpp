#pragma once

#include "descartes/numeric.hpp"
#include "descartes/patterns.hpp"

#include <string>
#include <vector>

namespace descartes {

// Ground-truth realizability for d <= 5, stored for the a_{d-1} > 0 half
// (second sign '+') and closed under the mirror involution on request.
struct FixtureRow {
  std::string pattern;              // sign pattern
  std::vector<std::string> orders;  // every realizable order
};

inline constexpr int kFixtureMaxDegree = 5;

bool has_fixture(int d);
const std::vector<FixtureRow>& fixture_rows(int d);

// All realizable couples of degree d (both halves), sorted.
std::vector<Couple> fixture_realizable(int d);

// Realizable / compatible, as a reduced fraction.
Rational fixture_ratio(int d);

}  // namespace descartes
