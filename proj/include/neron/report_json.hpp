#pragma once

// JSON forms of graphs and reports. Objects use sorted keys, so dumps are
// byte-stable for a given input.

#include "neron/compgroup.hpp"
#include "neron/criteria.hpp"
#include "neron/graph.hpp"
#include "neron/intlin.hpp"
#include "neron/purity.hpp"
#include "neron/resolution.hpp"

#include <json.hpp>

namespace neron {

/// Fits-in-int64 values become numbers, larger ones decimal strings.
nlohmann::json to_json(const Integer& value);
nlohmann::json to_json(const IntMatrix& m); // array of row arrays

nlohmann::json to_json(const LabelledGraph& graph);
nlohmann::json to_json(const PurityReport& report);
nlohmann::json to_json(const CriterionVerdict& verdict);
nlohmann::json to_json(const ComponentGroup& group);
nlohmann::json to_json(const SNFResult& snf);

/// The resolved graph plus a "trace" section.
nlohmann::json to_json(const ResolutionOutput& resolution);

} // namespace neron
