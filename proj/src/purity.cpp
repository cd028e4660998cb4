#include "neron/purity.hpp"

#include "neron/errors.hpp"

#include <numeric>
#include <string>

namespace neron {

namespace {

IntMatrix generization_from_basis(const LabelledGraph& graph, const std::vector<IntVector>& domain_basis,
                                  std::size_t param) {
    const ContractionResult c = contract_to(graph, param);
    const auto target_basis = cycle_space_basis(c.graph);
    const std::size_t ne = c.graph.edges.size();

    // Drop the coordinates of contracted edges.
    IntMatrix projected(ne, domain_basis.size());
    for (std::size_t k = 0; k < ne; ++k)
        for (std::size_t j = 0; j < domain_basis.size(); ++j)
            projected(k, j) = domain_basis[j][c.surviving_edges[k]];

    const IntMatrix basis_matrix = IntMatrix::from_columns(ne, target_basis);
    auto coords = solve_integer(basis_matrix, projected);
    if (!coords)
        throw ConsistencyError("generization map for parameter " + std::to_string(param) +
                               ": projection not in kernel");
    return *coords;
}

} // namespace

IntMatrix generization_matrix(const LabelledGraph& graph, std::size_t param) {
    return generization_from_basis(graph, cycle_space_basis(graph), param);
}

IntMatrix purity_matrix(const LabelledGraph& graph) {
    const auto basis = cycle_space_basis(graph);
    std::vector<IntMatrix> blocks;
    blocks.reserve(graph.num_params);
    for (std::size_t i = 1; i <= graph.num_params; ++i)
        blocks.push_back(generization_from_basis(graph, basis, i));
    return IntMatrix::vstack(blocks, basis.size());
}

PurityReport purity_report(const LabelledGraph& graph) {
    const auto basis = cycle_space_basis(graph);
    PurityReport r;
    r.domain_rank = basis.size();

    std::vector<IntMatrix> blocks;
    for (std::size_t i = 1; i <= graph.num_params; ++i) {
        blocks.push_back(generization_from_basis(graph, basis, i));
        r.codomain_ranks.push_back(blocks.back().rows());
    }
    r.matrix = IntMatrix::vstack(blocks, r.domain_rank);

    const SNFResult snf = smith_normal_form(r.matrix);
    const std::size_t rank = snf.rank();
    r.injective = rank == r.domain_rank;
    for (const Integer& d : snf.diagonal())
        if (d > 1)
            r.cokernel_torsion.push_back(d);
    r.cokernel_free_rank = r.matrix.rows() - rank;
    r.is_isomorphism = r.injective && r.cokernel_torsion.empty() && r.cokernel_free_rank == 0;

    const std::size_t sum = std::accumulate(r.codomain_ranks.begin(), r.codomain_ranks.end(), std::size_t{0});
    if (!r.injective)
        throw ConsistencyError("purity map is not injective");
    if (!r.cokernel_torsion.empty())
        throw ConsistencyError("purity map has torsion in its cokernel");
    if (r.domain_rank > sum)
        throw ConsistencyError("toric rank exceeds the sum of generic toric ranks");
    if (r.is_isomorphism != (r.domain_rank == sum))
        throw ConsistencyError("purity isomorphism test disagrees with rank count");
    return r;
}

} // namespace neron
