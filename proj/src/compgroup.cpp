#include "neron/compgroup.hpp"

#include "neron/errors.hpp"

namespace neron {

IntMatrix monodromy_pairing(const LabelledGraph& graph, std::size_t param) {
    const ContractionResult c = contract_to(graph, param);
    const auto basis = cycle_space_basis(c.graph);
    const std::size_t mu = basis.size();
    IntMatrix gram(mu, mu);
    for (std::size_t e = 0; e < c.graph.edges.size(); ++e) {
        const Integer weight = c.graph.edges[e].label[0];
        for (std::size_t a = 0; a < mu; ++a) {
            if (basis[a][e].is_zero())
                continue;
            for (std::size_t b = 0; b < mu; ++b)
                gram(a, b) += weight * basis[a][e] * basis[b][e];
        }
    }
    return gram;
}

ComponentGroup component_group(const LabelledGraph& graph, std::size_t param) {
    ComponentGroup g;
    g.param = param;
    g.gram = monodromy_pairing(graph, param);

    const SNFResult snf = smith_normal_form(g.gram);
    Integer product = 1;
    for (const Integer& d : snf.diagonal()) {
        product *= d;
        if (d > 1)
            g.invariant_factors.push_back(d);
    }
    const Integer det = determinant(g.gram);
    if (det <= 0)
        throw ConsistencyError("monodromy pairing is not positive definite");
    if (product != det)
        throw ConsistencyError("component group order differs from the Gram determinant");
    g.order = det;
    return g;
}

} // namespace neron
