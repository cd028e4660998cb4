#pragma once

// Reading and writing the graph description format:
//
//   {"num_params": n,
//    "vertices": [{"id": "v", "genus": 0}, ...],
//    "edges": [{"id": "e", "ends": ["tail", "head"], "label": [m1, ..., mn]}, ...]}
//
// "genus" is optional (default 0). Unknown keys are rejected, except for a
// top-level "trace" object which resolved graphs carry and readers ignore.

#include "neron/graph.hpp"

#include <string>
#include <string_view>

namespace neron {

/// Parses the description. Throws InvalidGraph on malformed JSON, schema
/// errors, or unknown endpoint ids. Does not run validate().
LabelledGraph parse_graph(std::string_view text);

/// Parses and validates.
LabelledGraph load_graph(std::string_view text);

/// Canonical pretty-printed form (sorted keys, two-space indent, trailing newline).
std::string print_graph(const LabelledGraph& graph);

} // namespace neron
