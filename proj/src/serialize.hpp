#pragma once

// JSON views of library results. Multisets and elements are rendered with
// the literal grammar so every string round-trips through the parser.

#include <json.hpp>

#include "biop/bioperate.hpp"
#include "biop/enumerate.hpp"
#include "biop/verify.hpp"

namespace biop {

using Json = nlohmann::ordered_json;

Json to_json(const SumProductReport& report, const Multiset& s,
             const std::optional<MinimalityResult>& minimality);
// Keys: input, target, transforms, appendages, trimmed, result.
Json to_json(const ConstructionTrace& trace);
Json to_json(const EnumerationReport& report);
Json to_json(const RecordReport& report);
Json uniform_json(std::int64_t p, std::int64_t n_max, const std::vector<UniformSolution>& solutions);
Json to_json(const VerifyReport& report);
Json completion_json(const Multiset& input, const Multiset& completed);

}  // namespace biop
