#include "neron/oracle.hpp"

#include "neron/criteria.hpp"
#include "neron/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace neron::oracle {

namespace {

void require_at_most(const LabelledGraph& graph, std::size_t limit, const char* what) {
    if (graph.edges.size() > limit)
        throw SizeLimitExceeded(std::string(what) + ": " + std::to_string(graph.edges.size()) +
                                " edges exceeds the limit of " + std::to_string(limit));
}

std::size_t root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
    return x;
}

} // namespace

std::vector<std::vector<std::size_t>> enumerate_cycles(const LabelledGraph& graph) {
    require_valid(graph);
    require_at_most(graph, max_cycle_edges, "enumerate_cycles");
    const auto adj = incidence_lists(graph);
    std::vector<std::vector<std::size_t>> cycles;

    // A cycle whose smallest edge is s = (u, v) is s plus a unique simple
    // v -> u path using only larger edges.
    for (std::size_t s = 0; s < graph.edges.size(); ++s) {
        const Edge& start = graph.edges[s];
        if (start.is_loop()) {
            cycles.push_back({s});
            continue;
        }
        std::vector<bool> on_path(graph.vertices.size(), false);
        std::vector<std::size_t> path;
        on_path[start.head] = true;

        auto extend = [&](auto&& self, std::size_t v) -> void {
            for (const auto& [e, w] : adj[v]) {
                if (e <= s || graph.edges[e].is_loop())
                    continue;
                if (w == start.tail) {
                    std::vector<std::size_t> cycle = path;
                    cycle.push_back(s);
                    cycle.push_back(e);
                    std::sort(cycle.begin(), cycle.end());
                    cycles.push_back(std::move(cycle));
                    continue;
                }
                if (on_path[w])
                    continue;
                on_path[w] = true;
                path.push_back(e);
                self(self, w);
                path.pop_back();
                on_path[w] = false;
            }
        };
        extend(extend, start.head);
    }
    return cycles;
}

bool aligned_bruteforce(const LabelledGraph& graph) {
    for (const auto& cycle : enumerate_cycles(graph))
        for (std::size_t a = 0; a < cycle.size(); ++a)
            for (std::size_t b = a + 1; b < cycle.size(); ++b)
                if (!labels_parallel(graph.edges[cycle[a]].label, graph.edges[cycle[b]].label))
                    return false;
    return true;
}

bool is_simple_cycle(const LabelledGraph& graph, std::span<const std::size_t> edges) {
    if (edges.empty())
        return false;
    std::set<std::size_t> distinct(edges.begin(), edges.end());
    if (distinct.size() != edges.size())
        return false;
    std::map<std::size_t, int> degree;
    std::vector<std::size_t> parent(graph.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t i : edges) {
        if (i >= graph.edges.size())
            return false;
        const Edge& e = graph.edges[i];
        degree[e.tail] += 1;
        degree[e.head] += 1;
        parent[root(parent, e.tail)] = root(parent, e.head);
    }
    const std::size_t component = root(parent, degree.begin()->first);
    for (const auto& [v, d] : degree)
        if (d != 2 || root(parent, v) != component)
            return false;
    return true;
}

Integer spanning_tree_order_oracle(const LabelledGraph& graph, std::size_t param) {
    const LabelledGraph g = contract_to(graph, param).graph;
    require_at_most(g, max_tree_edges, "spanning_tree_order_oracle");
    const std::size_t ne = g.edges.size();
    const std::size_t nv = g.vertices.size();

    Integer total = 0;
    for (std::uint32_t mask = 0; mask < (1u << ne); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != nv - 1)
            continue;
        std::vector<std::size_t> parent(nv);
        std::iota(parent.begin(), parent.end(), 0);
        bool acyclic = true;
        Integer weight = 1;
        for (std::size_t e = 0; e < ne; ++e) {
            const Edge& ed = g.edges[e];
            if (mask & (1u << e)) {
                const std::size_t a = root(parent, ed.tail), b = root(parent, ed.head);
                if (a == b) {
                    acyclic = false;
                    break;
                }
                parent[a] = b;
            } else {
                weight *= ed.label[0];
            }
        }
        if (acyclic)
            total += weight;
    }
    return total;
}

std::optional<ClassConstraint> parse_class_constraint(std::string_view name) noexcept {
    for (auto c : {ClassConstraint::any, ClassConstraint::regular, ClassConstraint::disciplined,
                   ClassConstraint::single_param})
        if (name == to_string(c))
            return c;
    return std::nullopt;
}

const char* to_string(ClassConstraint c) noexcept {
    switch (c) {
    case ClassConstraint::any: return "any";
    case ClassConstraint::regular: return "regular";
    case ClassConstraint::disciplined: return "disciplined";
    case ClassConstraint::single_param: return "single_param";
    }
    return "unknown";
}

std::uint64_t draw_below(Lcg64& rng, std::uint64_t bound) {
    const std::uint64_t high = rng() >> 32;
    return (high * bound) >> 32;
}

namespace {

ExponentVector single_entry(std::size_t n, std::size_t i, std::uint32_t m) {
    std::vector<std::uint32_t> entries(n, 0);
    entries[i] = m;
    return ExponentVector(std::move(entries));
}

// Uniform over the admissible labels of each class.
ExponentVector draw_label(Lcg64& rng, const GeneratorConfig& config, bool loop) {
    const std::size_t n = config.num_params;
    switch (config.class_constraint) {
    case ClassConstraint::regular:
        return single_entry(n, draw_below(rng, n), 1);
    case ClassConstraint::single_param:
        return single_entry(n, 0, static_cast<std::uint32_t>(1 + draw_below(rng, config.max_exponent)));
    case ClassConstraint::disciplined:
        if (loop) {
            const std::size_t i = draw_below(rng, n);
            return single_entry(n, i, static_cast<std::uint32_t>(1 + draw_below(rng, config.max_exponent)));
        }
        break;
    case ClassConstraint::any:
        break;
    }
    for (;;) {
        std::vector<std::uint32_t> entries(n);
        for (auto& m : entries)
            m = static_cast<std::uint32_t>(draw_below(rng, config.max_exponent + 1));
        ExponentVector label(std::move(entries));
        if (!label.is_zero())
            return label;
    }
}

} // namespace

LabelledGraph random_labelled_graph(const GeneratorConfig& config) {
    if (config.num_vertices < 1 || config.num_params < 1 || config.max_exponent < 1)
        throw InvalidParameter("generator: vertices, params and max exponent must be positive");
    if (config.num_edges + 1 < config.num_vertices)
        throw InvalidParameter("generator: too few edges to connect the vertices");
    if (config.max_exponent > (1u << 16))
        throw InvalidParameter("generator: max exponent too large");

    Lcg64 rng(config.seed);
    LabelledGraph g;
    g.num_params = config.num_params;
    for (std::size_t v = 0; v < config.num_vertices; ++v)
        g.vertices.push_back({"v" + std::to_string(v), static_cast<std::uint32_t>(draw_below(rng, 3))});

    auto add_edge = [&](std::size_t tail, std::size_t head) {
        ExponentVector label = draw_label(rng, config, tail == head);
        g.edges.push_back({"e" + std::to_string(g.edges.size()), tail, head, std::move(label)});
    };

    for (std::size_t v = 1; v < config.num_vertices; ++v) {
        const std::size_t p = draw_below(rng, v);
        if (draw_below(rng, 2) == 1)
            add_edge(v, p);
        else
            add_edge(p, v);
    }
    while (g.edges.size() < config.num_edges) {
        const std::size_t tail = draw_below(rng, config.num_vertices);
        const std::size_t head = draw_below(rng, config.num_vertices);
        add_edge(tail, head);
    }
    return g;
}

} // namespace neron::oracle
