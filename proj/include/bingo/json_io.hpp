// JSON documents for closure traces and search reports. Field names are
// part of the tool's output contract and stay fixed: traces use n, start,
// depth, steps (index, added, firing, completed), final; reports use n,
// scope, max_depth, witness_count, witnesses, boards_examined, elapsed_ms,
// seed. Boards serialize as board text, lines as {kind, index}.
#pragma once

#include <string_view>

#include "json.hpp"

#include "bingo/closure.hpp"
#include "bingo/search.hpp"

namespace bingo {

std::string to_string(SearchScope scope);  // "all", "spanning", "nonspanning"
SearchScope scope_from_string(std::string_view name);

nlohmann::ordered_json trace_to_json(const ClosureTrace& trace);

// Inverse of trace_to_json; throws std::invalid_argument (or the JSON
// library's exceptions) on malformed documents.
ClosureTrace trace_from_json(const nlohmann::ordered_json& doc);

nlohmann::ordered_json report_to_json(const SearchReport& report);

}  // namespace bingo
