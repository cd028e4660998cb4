#include "neron/report_json.hpp"

#include <limits>
#include <type_traits>

namespace neron {

using nlohmann::json;

json to_json(const Integer& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
        return value.convert_to<std::int64_t>();
    return value.str();
}

json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

json integers(const IntVector& v) {
    json out = json::array();
    for (const auto& x : v)
        out.push_back(to_json(x));
    return out;
}

} // namespace

json to_json(const LabelledGraph& graph) {
    json vertices = json::array();
    for (const auto& v : graph.vertices)
        vertices.push_back({{"id", v.id}, {"genus", v.genus}});
    json edges = json::array();
    for (const auto& e : graph.edges) {
        const auto end_id = [&](std::size_t i) {
            return i < graph.vertices.size() ? graph.vertices[i].id : std::string("?");
        };
        edges.push_back({{"id", e.id}, {"ends", {end_id(e.tail), end_id(e.head)}}, {"label", e.label.entries()}});
    }
    return {{"num_params", graph.num_params}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

json to_json(const PurityReport& r) {
    return {{"domain_rank", r.domain_rank},
            {"codomain_ranks", r.codomain_ranks},
            {"matrix", to_json(r.matrix)},
            {"injective", r.injective},
            {"cokernel_torsion", integers(r.cokernel_torsion)},
            {"cokernel_free_rank", r.cokernel_free_rank},
            {"is_isomorphism", r.is_isomorphism}};
}

json to_json(const CriterionVerdict& v) {
    json witness = nullptr;
    if (v.witness) {
        witness = std::visit(
            [](const auto& w) -> json {
                using W = std::decay_t<decltype(w)>;
                if constexpr (std::is_same_v<W, AlignmentWitness>)
                    return {{"kind", "cycle"}, {"edges", {w.first, w.second}}, {"cycle", w.cycle}};
                else if constexpr (std::is_same_v<W, RankWitness>)
                    return {{"kind", "ranks"}, {"mu", w.mu}, {"generic_ranks", w.generic_ranks}};
                else
                    return {{"kind", "edge"}, {"edge", w.edge}};
            },
            *v.witness);
    }
    return {{"criterion", to_string(v.criterion)}, {"holds", v.holds}, {"witness", std::move(witness)}};
}

json to_json(const ComponentGroup& g) {
    return {{"param", g.param}, {"invariant_factors", integers(g.invariant_factors)}, {"order", to_json(g.order)}};
}

json to_json(const SNFResult& snf) {
    return {{"U", to_json(snf.U)}, {"S", to_json(snf.S)}, {"V", to_json(snf.V)}, {"diagonal", integers(snf.diagonal())}};
}

json to_json(const ResolutionOutput& r) {
    json out = to_json(r.graph);
    json trace = json::array();
    for (const auto& t : r.edge_trace)
        trace.push_back({{"new", t.new_edge}, {"old", t.old_edge}, {"position", t.position}});
    out["trace"] = {{"edges", std::move(trace)}, {"new_vertices", r.new_vertices}};
    return out;
}

} // namespace neron
