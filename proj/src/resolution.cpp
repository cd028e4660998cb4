#include "neron/resolution.hpp"

#include "neron/errors.hpp"

#include <set>

namespace neron {

namespace {

// Appends primes until the id is unused.
std::string fresh_id(std::string base, std::set<std::string>& taken) {
    while (!taken.insert(base).second)
        base += '\'';
    return base;
}

ExponentVector unit(std::size_t n, std::size_t i) {
    std::vector<std::uint32_t> v(n, 0);
    v[i] = 1;
    return ExponentVector(std::move(v));
}

} // namespace

ResolutionOutput resolve(const LabelledGraph& graph) {
    require_valid(graph);
    for (const Edge& e : graph.edges)
        if (e.is_loop() && e.label.support_size() >= 2)
            throw NotDisciplined(e.id);

    ResolutionOutput out;
    out.graph.num_params = graph.num_params;
    out.graph.vertices = graph.vertices;

    std::set<std::string> vertex_ids, edge_ids;
    for (const auto& v : graph.vertices)
        vertex_ids.insert(v.id);
    for (const auto& e : graph.edges)
        edge_ids.insert(e.id);

    for (const Edge& e : graph.edges) {
        const std::uint64_t d = e.label.total_degree();
        if (d == 1) {
            out.graph.edges.push_back(e);
            out.edge_trace.push_back({e.id, e.id, 1});
            continue;
        }

        std::vector<ExponentVector> labels;
        for (std::size_t i = 0; i < graph.num_params; ++i)
            for (std::uint32_t k = 0; k < e.label[i]; ++k)
                labels.push_back(unit(graph.num_params, i));

        // Chain tail = w0, w1, ..., w_{d-1}, w_d = head (head = tail for loops).
        std::vector<std::size_t> stops{e.tail};
        for (std::uint64_t k = 1; k < d; ++k) {
            const std::string id = fresh_id(e.id + "#" + std::to_string(k), vertex_ids);
            stops.push_back(out.graph.vertices.size());
            out.graph.vertices.push_back({id, 0});
            out.new_vertices.push_back(id);
        }
        stops.push_back(e.head);

        edge_ids.erase(e.id);
        for (std::uint64_t k = 0; k < d; ++k) {
            const std::string id = fresh_id(e.id + "/" + std::to_string(k + 1), edge_ids);
            out.graph.edges.push_back({id, stops[k], stops[k + 1], labels[k]});
            out.edge_trace.push_back({id, e.id, k + 1});
        }
    }
    return out;
}

} // namespace neron
