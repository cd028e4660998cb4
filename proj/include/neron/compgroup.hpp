#pragma once

// Component groups over the trait at the generic point of each divisor
// branch, computed from the monodromy pairing on H1 of the contracted graph.

#include "neron/graph.hpp"
#include "neron/intlin.hpp"

#include <cstddef>

namespace neron {

struct ComponentGroup {
    std::size_t param = 0;
    IntMatrix gram;             // mu_i x mu_i
    IntVector invariant_factors; // nontrivial factors (> 1), ascending divisibility chain
    Integer order = 1;          // product of factors = det(gram)
};

/// Gram matrix <a, b> = sum over surviving edges of m_i(e) a(e) b(e), in the
/// fundamental-cycle basis of contract(graph, {param}). `param` is 1-based.
IntMatrix monodromy_pairing(const LabelledGraph& graph, std::size_t param);

/// coker of the monodromy pairing. Throws ConsistencyError if the order
/// and the determinant disagree or the determinant is not positive.
ComponentGroup component_group(const LabelledGraph& graph, std::size_t param);

} // namespace neron
