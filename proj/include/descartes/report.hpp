#pragma once

#include "descartes/classification.hpp"
#include "descartes/realization.hpp"
#include "descartes/resultants.hpp"

#include "json.hpp"

#include <string>

namespace descartes {

using Json = nlohmann::ordered_json;

// Witnesses travel as arrays of "num/den" strings.
Json witness_json(const RootConfiguration& rc);
// Accepts strings ("3/2", "-1.25", "4") or integers.
RootConfiguration witness_from_json(const Json& j);

Json status_json(const Couple& couple, const RealizationStatus& s);

Json table_json(const ClassificationTable& t);
std::string table_csv(const ClassificationTable& t);
// One row per sign pattern, as in the hand-made tables: realizable orders,
// orders excluded by a filter, orders left open.
std::string table_markdown(const ClassificationTable& t);

Json counts_json(int max_degree);
std::string counts_csv(int max_degree);
std::string counts_markdown(int max_degree);

Json factorization_json(const FactorizationReport& r);
Json structural_json(const StructuralReport& r);
Json trace_json(const BlockReductionTrace& t);
Json theorem1_json(const Theorem1Report& r);
Json fuzz_json(const FuzzReport& r);

// Fixed-point decimal, independent of the global locale.
std::string fixed(double x, int digits = 6);

}  // namespace descartes
