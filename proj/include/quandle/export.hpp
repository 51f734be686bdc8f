#pragma once

#include "quandle/cayley.hpp"
#include "quandle/word.hpp"

#include <string>
#include <vector>

namespace quandle {

/// JSON document for an enumerated table:
/// {"action":[[...]],"components":[[ids]],"generators":[names],
///  "reps":[{"base":name,"word":rendered}],"size":n}
/// Output is deterministic for identical tables.
std::string table_to_json(const CayleyTable& t, const std::vector<GeneratorId>& names);

/// Undirected DOT graph: one edge per unordered pair per generator
/// label, loops included, vertices labeled by their representatives and
/// generator seeds drawn emphasized.
std::string table_to_dot(const CayleyTable& t, const std::vector<GeneratorId>& names);

/// Rendered representative, e.g. "c^a" or "b" for an empty word.
std::string rep_to_string(const CayleyTable::Rep& rep, const std::vector<GeneratorId>& names);

} // namespace quandle
