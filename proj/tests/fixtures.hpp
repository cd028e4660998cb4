#pragma once

// Small named graphs shared by the test suites.

#include "neron/graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace neron::testing {

struct EdgeSpec {
    std::size_t tail;
    std::size_t head;
    std::vector<std::uint32_t> label;
};

inline LabelledGraph make_graph(std::size_t num_params, std::vector<std::uint32_t> genera,
                                const std::vector<EdgeSpec>& edges) {
    LabelledGraph g;
    g.num_params = num_params;
    for (std::size_t i = 0; i < genera.size(); ++i)
        g.vertices.push_back({"v" + std::to_string(i), genera[i]});
    for (std::size_t i = 0; i < edges.size(); ++i)
        g.edges.push_back({"e" + std::to_string(i + 1), edges[i].tail, edges[i].head, ExponentVector(edges[i].label)});
    return g;
}

/// One genus-0 vertex with a loop labelled (1,1).
inline LabelledGraph g_t() { return make_graph(2, {0}, {{0, 0, {1, 1}}}); }

/// Two vertices, parallel edges e1 (1,0) and e2 (0,1), both oriented v0 -> v1.
inline LabelledGraph g_b(std::uint32_t genus0 = 0, std::uint32_t genus1 = 0) {
    return make_graph(2, {genus0, genus1}, {{0, 1, {1, 0}}, {0, 1, {0, 1}}});
}

/// Two vertices, parallel edges both labelled (1,0).
inline LabelledGraph g_b1() { return make_graph(2, {0, 0}, {{0, 1, {1, 0}}, {0, 1, {1, 0}}}); }

/// Path v0 - v1 - v2.
inline LabelledGraph path3() { return make_graph(2, {0, 0, 0}, {{0, 1, {1, 0}}, {1, 2, {0, 1}}}); }

/// Cycle of m edges all carrying `label`.
inline LabelledGraph cycle(std::size_t m, std::vector<std::uint32_t> label, std::uint32_t genus = 0) {
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 0; i < m; ++i)
        edges.push_back({i, (i + 1) % m, label});
    return make_graph(label.size(), std::vector<std::uint32_t>(m, genus), edges);
}

/// Single vertex with one loop.
inline LabelledGraph loop(std::vector<std::uint32_t> label, std::uint32_t genus = 0) {
    const std::size_t n = label.size();
    return make_graph(n, {genus}, {{0, 0, std::move(label)}});
}

/// Complete graph on four vertices, all labels (1).
inline LabelledGraph k4() {
    std::vector<EdgeSpec> edges;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b)
            edges.push_back({a, b, {1}});
    return make_graph(1, {0, 0, 0, 0}, edges);
}

} // namespace neron::testing
