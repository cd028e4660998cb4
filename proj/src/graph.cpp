#include "neron/graph.hpp"

#include "neron/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string_view>

namespace neron {

bool ExponentVector::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](auto m) { return m == 0; });
}

std::size_t ExponentVector::support_size() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [](auto m) { return m > 0; }));
}

std::uint64_t ExponentVector::total_degree() const noexcept {
    return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0});
}

bool ExponentVector::is_unit() const noexcept {
    return support_size() == 1 && total_degree() == 1;
}

ExponentVector ExponentVector::restrict_to(std::span<const std::size_t> indices) const {
    std::vector<std::uint32_t> out;
    out.reserve(indices.size());
    for (std::size_t i : indices)
        out.push_back(entries_.at(i));
    return ExponentVector(std::move(out));
}

std::optional<std::size_t> LabelledGraph::find_vertex(std::string_view id) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id)
            return i;
    return std::nullopt;
}

std::optional<std::size_t> LabelledGraph::find_edge(std::string_view id) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].id == id)
            return i;
    return std::nullopt;
}

const char* to_string(Violation::Kind kind) noexcept {
    switch (kind) {
    case Violation::Kind::no_params: return "no parameters";
    case Violation::Kind::empty: return "empty";
    case Violation::Kind::disconnected: return "disconnected";
    case Violation::Kind::bad_endpoint: return "bad endpoint";
    case Violation::Kind::label_length: return "label length";
    case Violation::Kind::zero_label: return "zero label";
    case Violation::Kind::duplicate_vertex_id: return "duplicate vertex id";
    case Violation::Kind::duplicate_edge_id: return "duplicate edge id";
    }
    return "unknown";
}

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // The smaller index becomes the root.
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (b < a)
            std::swap(a, b);
        parent_[b] = a;
    }

private:
    std::vector<std::size_t> parent_;
};

} // namespace

std::vector<Violation> validate(const LabelledGraph& graph) {
    using Kind = Violation::Kind;
    std::vector<Violation> out;
    if (graph.num_params == 0)
        out.push_back({Kind::no_params, "", "num_params must be at least 1"});
    if (graph.vertices.empty())
        out.push_back({Kind::empty, "", "graph has no vertices"});

    std::set<std::string_view> seen;
    for (const auto& v : graph.vertices)
        if (!seen.insert(v.id).second)
            out.push_back({Kind::duplicate_vertex_id, v.id, "vertex id '" + v.id + "' is repeated"});
    seen.clear();
    for (const auto& e : graph.edges)
        if (!seen.insert(e.id).second)
            out.push_back({Kind::duplicate_edge_id, e.id, "edge id '" + e.id + "' is repeated"});

    const std::size_t nv = graph.vertices.size();
    bool endpoints_ok = true;
    for (const auto& e : graph.edges) {
        if (e.tail >= nv || e.head >= nv) {
            endpoints_ok = false;
            out.push_back({Kind::bad_endpoint, e.id, "edge '" + e.id + "' has an endpoint outside the vertex set"});
        }
        if (e.label.size() != graph.num_params) {
            out.push_back({Kind::label_length, e.id,
                           "edge '" + e.id + "' label has length " + std::to_string(e.label.size()) +
                               ", expected " + std::to_string(graph.num_params)});
        } else if (e.label.is_zero()) {
            out.push_back({Kind::zero_label, e.id, "edge '" + e.id + "' has zero label"});
        }
    }

    if (nv > 0 && endpoints_ok) {
        UnionFind uf(nv);
        for (const auto& e : graph.edges)
            uf.unite(e.tail, e.head);
        for (std::size_t v = 1; v < nv; ++v)
            if (uf.find(v) != 0) {
                out.push_back({Kind::disconnected, graph.vertices[v].id,
                               "graph is disconnected: vertex '" + graph.vertices[v].id +
                                   "' is unreachable"});
                break;
            }
    }
    return out;
}

void require_valid(const LabelledGraph& graph) {
    const auto violations = validate(graph);
    if (violations.empty())
        return;
    std::string msg = "invalid graph:";
    for (const auto& v : violations)
        msg += " " + v.message + ";";
    msg.pop_back();
    throw InvalidGraph(msg);
}

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> incidence_lists(const LabelledGraph& graph) {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(graph.vertices.size());
    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
        const Edge& e = graph.edges[i];
        adj[e.tail].emplace_back(i, e.head);
        if (!e.is_loop())
            adj[e.head].emplace_back(i, e.tail);
    }
    return adj;
}

std::size_t betti_one(const LabelledGraph& graph) {
    require_valid(graph);
    return graph.edges.size() + 1 - graph.vertices.size();
}

std::uint64_t arithmetic_genus(const LabelledGraph& graph) {
    std::uint64_t g = betti_one(graph);
    for (const auto& v : graph.vertices)
        g += v.genus;
    return g;
}

IntMatrix incidence_matrix(const LabelledGraph& graph) {
    require_valid(graph);
    IntMatrix m(graph.vertices.size(), graph.edges.size());
    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
        const Edge& e = graph.edges[i];
        if (e.is_loop())
            continue;
        m(e.tail, i) = -1;
        m(e.head, i) = 1;
    }
    return m;
}

std::vector<IntVector> cycle_space_basis(const LabelledGraph& graph) {
    require_valid(graph);
    const std::size_t nv = graph.vertices.size();
    const std::size_t ne = graph.edges.size();
    const auto adj = incidence_lists(graph);

    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent_edge(nv, none);
    std::vector<std::size_t> depth(nv, 0);
    std::vector<bool> visited(nv, false);
    std::vector<bool> in_tree(ne, false);

    // Iterative DFS that mirrors the recursive visit order.
    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
    visited[0] = true;
    while (!stack.empty()) {
        auto& [v, pos] = stack.back();
        if (pos == adj[v].size()) {
            stack.pop_back();
            continue;
        }
        const auto [edge, w] = adj[v][pos++];
        if (visited[w])
            continue;
        visited[w] = true;
        in_tree[edge] = true;
        parent_edge[w] = edge;
        depth[w] = depth[v] + 1;
        stack.emplace_back(w, 0);
    }

    auto parent_of = [&](std::size_t v) {
        const Edge& f = graph.edges[parent_edge[v]];
        return f.tail == v ? f.head : f.tail;
    };
    // Coefficient of the tree edge above `v` when walking from v to its parent.
    auto upward_sign = [&](std::size_t v) { return graph.edges[parent_edge[v]].tail == v ? 1 : -1; };

    std::vector<IntVector> basis;
    for (std::size_t i = 0; i < ne; ++i) {
        if (in_tree[i])
            continue;
        IntVector cycle(ne);
        cycle[i] = 1;
        // Close the cycle with the tree path from head back to tail.
        std::size_t a = graph.edges[i].head;
        std::size_t b = graph.edges[i].tail;
        while (a != b) {
            if (depth[a] >= depth[b]) {
                cycle[parent_edge[a]] += upward_sign(a);
                a = parent_of(a);
            } else {
                cycle[parent_edge[b]] -= upward_sign(b);
                b = parent_of(b);
            }
        }
        basis.push_back(std::move(cycle));
    }
    return basis;
}

ContractionResult contract(const LabelledGraph& graph, std::span<const std::size_t> params) {
    require_valid(graph);
    if (params.empty())
        throw InvalidParameter("contract: parameter set must be nonempty");
    std::vector<std::size_t> keep;
    for (std::size_t p : params) {
        if (p < 1 || p > graph.num_params)
            throw InvalidParameter("parameter index " + std::to_string(p) + " outside 1.." +
                                   std::to_string(graph.num_params));
        keep.push_back(p - 1);
    }
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

    auto survives = [&](const Edge& e) {
        return std::any_of(keep.begin(), keep.end(), [&](std::size_t i) { return e.label[i] > 0; });
    };

    const std::size_t nv = graph.vertices.size();
    UnionFind uf(nv);
    for (const auto& e : graph.edges)
        if (!survives(e))
            uf.unite(e.tail, e.head);

    ContractionResult out;
    out.graph.num_params = keep.size();
    out.vertex_map.assign(nv, 0);

    // Roots are the lowest index of their class, so classes come out in
    // order of first member.
    std::vector<std::size_t> class_of_root(nv, 0);
    std::vector<std::int64_t> collapsed_betti;
    for (std::size_t v = 0; v < nv; ++v) {
        const std::size_t root = uf.find(v);
        if (root == v) {
            class_of_root[v] = out.graph.vertices.size();
            out.graph.vertices.push_back({graph.vertices[v].id, 0});
            collapsed_betti.push_back(1);
        }
        const std::size_t cls = class_of_root[root];
        out.vertex_map[v] = cls;
        out.graph.vertices[cls].genus += graph.vertices[v].genus;
        collapsed_betti[cls] -= 1;
    }

    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
        const Edge& e = graph.edges[i];
        if (!survives(e)) {
            collapsed_betti[out.vertex_map[e.tail]] += 1;
            continue;
        }
        out.graph.edges.push_back(
            {e.id, out.vertex_map[e.tail], out.vertex_map[e.head], e.label.restrict_to(keep)});
        out.surviving_edges.push_back(i);
    }

    for (std::size_t c = 0; c < out.graph.vertices.size(); ++c) {
        if (collapsed_betti[c] < 0)
            throw ConsistencyError("contract: collapsed class has negative Betti number");
        out.graph.vertices[c].genus += static_cast<std::uint32_t>(collapsed_betti[c]);
    }
    return out;
}

ContractionResult contract_to(const LabelledGraph& graph, std::size_t param) {
    const std::size_t p[] = {param};
    return contract(graph, p);
}

} // namespace neron
