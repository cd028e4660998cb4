#pragma once

// Graph-level blow-up of a disciplined labelled graph into one whose labels
// are all single parameters to the first power.

#include "neron/graph.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace neron {

struct TraceEntry {
    std::string new_edge;
    std::string old_edge;
    std::size_t position = 1; // 1-based position in the chain replacing old_edge

    friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct ResolutionOutput {
    LabelledGraph graph;
    std::vector<TraceEntry> edge_trace;   // one entry per edge of `graph`, same order
    std::vector<std::string> new_vertices; // ids of the inserted genus-0 vertices
};

/// Replaces every edge of total degree d >= 2 by a chain of d edges through
/// d - 1 new genus-0 vertices "<edge>#k"; chain edges are "<edge>/k" and
/// carry m1 copies of unit vector 1, then m2 copies of unit vector 2, and so
/// on. A loop becomes a d-cycle through its vertex. Edges with d = 1 keep
/// their id.
///
/// Throws NotDisciplined for the first loop whose label involves two or
/// more parameters.
ResolutionOutput resolve(const LabelledGraph& graph);

} // namespace neron
