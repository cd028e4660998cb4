#pragma once

// Generization maps H1(G) -> H1(G_i) onto each single-parameter contraction,
// and the purity map into their direct sum.

#include "neron/graph.hpp"
#include "neron/intlin.hpp"

#include <cstddef>
#include <vector>

namespace neron {

struct PurityReport {
    std::size_t domain_rank = 0;              // mu = h1(G)
    std::vector<std::size_t> codomain_ranks;  // mu_i = h1(G_i), i = 1..n
    IntMatrix matrix;                         // (sum mu_i) x mu
    bool injective = false;
    IntVector cokernel_torsion;
    std::size_t cokernel_free_rank = 0;
    bool is_isomorphism = false;
};

/// Matrix (mu_i x mu) of H1(G) -> H1(contract(G, {param})) in the
/// fundamental-cycle bases of both graphs. `param` is 1-based.
IntMatrix generization_matrix(const LabelledGraph& graph, std::size_t param);

/// Generization matrices for params 1..n stacked top to bottom.
IntMatrix purity_matrix(const LabelledGraph& graph);

/// Classifies the purity map. Throws ConsistencyError if injectivity,
/// torsion-freeness of the cokernel, or mu <= sum mu_i fails, or if the
/// isomorphism test disagrees with the rank count.
PurityReport purity_report(const LabelledGraph& graph);

} // namespace neron
