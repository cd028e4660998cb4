#include "neron/criteria.hpp"

#include "neron/errors.hpp"
#include "neron/purity.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace neron {

const char* to_string(Criterion c) noexcept {
    switch (c) {
    case Criterion::toric_additive: return "toric_additive";
    case Criterion::aligned: return "aligned";
    case Criterion::disciplined: return "disciplined";
    case Criterion::regular: return "regular";
    }
    return "unknown";
}

std::optional<Criterion> parse_criterion(std::string_view name) noexcept {
    if (name == "ta" || name == "toric_additive")
        return Criterion::toric_additive;
    for (Criterion c : all_criteria)
        if (name == to_string(c))
            return c;
    return std::nullopt;
}

bool labels_parallel(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("labels_parallel: labels have different lengths");
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("labels_parallel: zero label");
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (std::uint64_t{a[i]} * b[j] != std::uint64_t{a[j]} * b[i])
                return false;
    return true;
}

namespace {

// Hopcroft-Tarjan keyed on the parent edge; parallel edges form cycles.
class BlockFinder {
public:
    explicit BlockFinder(const LabelledGraph& g)
        : g_(g), adj_(incidence_lists(g)), disc_(g.vertices.size(), unvisited), low_(g.vertices.size(), 0) {}

    std::vector<std::vector<std::size_t>> run() {
        for (std::size_t v = 0; v < g_.vertices.size(); ++v)
            if (disc_[v] == unvisited)
                visit(v, unvisited);
        for (std::size_t i = 0; i < g_.edges.size(); ++i)
            if (g_.edges[i].is_loop())
                blocks_.push_back({i});
        for (auto& b : blocks_)
            std::sort(b.begin(), b.end());
        std::sort(blocks_.begin(), blocks_.end(),
                  [](const auto& x, const auto& y) { return x.front() < y.front(); });
        return std::move(blocks_);
    }

private:
    static constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();

    void visit(std::size_t u, std::size_t parent_edge) {
        disc_[u] = low_[u] = counter_++;
        for (const auto& [e, w] : adj_[u]) {
            if (e == parent_edge || g_.edges[e].is_loop())
                continue;
            if (disc_[w] == unvisited) {
                stack_.push_back(e);
                visit(w, e);
                low_[u] = std::min(low_[u], low_[w]);
                if (low_[w] >= disc_[u]) {
                    std::vector<std::size_t> block;
                    std::size_t top;
                    do {
                        top = stack_.back();
                        stack_.pop_back();
                        block.push_back(top);
                    } while (top != e);
                    blocks_.push_back(std::move(block));
                }
            } else if (disc_[w] < disc_[u]) {
                stack_.push_back(e);
                low_[u] = std::min(low_[u], disc_[w]);
            }
        }
    }

    const LabelledGraph& g_;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj_;
    std::vector<std::size_t> disc_;
    std::vector<std::size_t> low_;
    std::vector<std::size_t> stack_;
    std::vector<std::vector<std::size_t>> blocks_;
    std::size_t counter_ = 0;
};

// Unit-capacity flow network used to route two vertex-disjoint paths.
class FlowNetwork {
public:
    struct Arc {
        std::size_t to;
        int cap;
        std::size_t rev;
    };

    explicit FlowNetwork(std::size_t n) : arcs_(n) {}

    // Returns the index of the forward arc within arcs_[from].
    std::size_t add(std::size_t from, std::size_t to, int cap) {
        arcs_[from].push_back({to, cap, arcs_[to].size()});
        arcs_[to].push_back({from, 0, arcs_[from].size() - 1});
        return arcs_[from].size() - 1;
    }

    int max_flow(std::size_t s, std::size_t t, int limit) {
        int flow = 0;
        while (flow < limit && augment(s, t))
            ++flow;
        return flow;
    }

    // Flow currently carried by a forward arc.
    int flow_on(std::size_t from, std::size_t idx) const {
        const Arc& a = arcs_[from][idx];
        return arcs_[a.to][a.rev].cap;
    }

private:
    bool augment(std::size_t s, std::size_t t) {
        constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
        std::vector<std::pair<std::size_t, std::size_t>> prev(arcs_.size(), {none, none});
        std::deque<std::size_t> queue{s};
        prev[s] = {s, none};
        while (!queue.empty() && prev[t].first == none) {
            const std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < arcs_[u].size(); ++i) {
                const Arc& a = arcs_[u][i];
                if (a.cap > 0 && prev[a.to].first == none) {
                    prev[a.to] = {u, i};
                    queue.push_back(a.to);
                }
            }
        }
        if (prev[t].first == none)
            return false;
        for (std::size_t v = t; v != s;) {
            auto [u, i] = prev[v];
            Arc& a = arcs_[u][i];
            a.cap -= 1;
            arcs_[a.to][a.rev].cap += 1;
            v = u;
        }
        return true;
    }

    std::vector<std::vector<Arc>> arcs_;
};

} // namespace

std::vector<std::vector<std::size_t>> blocks(const LabelledGraph& graph) {
    require_valid(graph);
    return BlockFinder(graph).run();
}

std::vector<std::size_t> cycle_through(const LabelledGraph& graph, std::size_t e, std::size_t f) {
    const std::size_t ne = graph.edges.size();
    if (e >= ne || f >= ne || e == f || graph.edges[e].is_loop() || graph.edges[f].is_loop())
        throw ConsistencyError("cycle_through: need two distinct non-loop edges");

    // Vertex v splits into in = 2v and out = 2v + 1 joined by a unit arc.
    const std::size_t nv = graph.vertices.size();
    const std::size_t source = 2 * nv;
    const std::size_t sink = 2 * nv + 1;
    FlowNetwork net(2 * nv + 2);
    for (std::size_t v = 0; v < nv; ++v)
        net.add(2 * v, 2 * v + 1, 1);

    struct EdgeArcs {
        std::size_t forward; // tail_out -> head_in
        std::size_t backward; // head_out -> tail_in
    };
    std::vector<std::optional<EdgeArcs>> arcs(ne);
    for (std::size_t g = 0; g < ne; ++g) {
        const Edge& ed = graph.edges[g];
        if (g == e || g == f || ed.is_loop())
            continue;
        arcs[g] = EdgeArcs{net.add(2 * ed.tail + 1, 2 * ed.head, 1), net.add(2 * ed.head + 1, 2 * ed.tail, 1)};
    }
    const Edge& ee = graph.edges[e];
    const Edge& ff = graph.edges[f];
    net.add(source, 2 * ee.tail, 1);
    net.add(source, 2 * ee.head, 1);
    const std::size_t to_sink_c = net.add(2 * ff.tail + 1, sink, 1);
    const std::size_t to_sink_d = net.add(2 * ff.head + 1, sink, 1);
    if (net.max_flow(source, sink, 2) < 2)
        throw ConsistencyError("cycle_through: edges '" + ee.id + "' and '" + ff.id + "' share no cycle");

    auto reaches_sink = [&](std::size_t v) {
        return (v == ff.tail && net.flow_on(2 * ff.tail + 1, to_sink_c) > 0) ||
               (v == ff.head && net.flow_on(2 * ff.head + 1, to_sink_d) > 0);
    };
    // Follow net flow from `start` until it exits towards an endpoint of f.
    auto trace = [&](std::size_t start, std::size_t& end) {
        std::vector<std::size_t> path;
        std::size_t v = start;
        while (!reaches_sink(v)) {
            bool moved = false;
            for (std::size_t g = 0; g < ne && !moved; ++g) {
                if (!arcs[g])
                    continue;
                const Edge& ed = graph.edges[g];
                const int net_flow = net.flow_on(2 * ed.tail + 1, arcs[g]->forward) -
                                     net.flow_on(2 * ed.head + 1, arcs[g]->backward);
                if (net_flow > 0 && ed.tail == v) {
                    path.push_back(g);
                    v = ed.head;
                    moved = true;
                } else if (net_flow < 0 && ed.head == v) {
                    path.push_back(g);
                    v = ed.tail;
                    moved = true;
                }
            }
            if (!moved || path.size() > ne)
                throw ConsistencyError("cycle_through: flow decomposition failed");
        }
        end = v;
        return path;
    };

    std::size_t end_a = 0, end_b = 0;
    const auto from_tail = trace(ee.tail, end_a);
    const auto from_head = trace(ee.head, end_b);

    std::vector<std::size_t> cycle{e};
    cycle.insert(cycle.end(), from_head.begin(), from_head.end());
    cycle.push_back(f);
    cycle.insert(cycle.end(), from_tail.rbegin(), from_tail.rend());
    return cycle;
}

CriterionVerdict is_aligned(const LabelledGraph& graph) {
    CriterionVerdict v{Criterion::aligned, true, std::nullopt};
    for (const auto& block : blocks(graph)) {
        if (block.size() < 2)
            continue;
        // Proportionality is transitive on nonzero vectors, so comparing
        // against the first edge finds the lexicographically first bad pair.
        const ExponentVector& ref = graph.edges[block.front()].label;
        for (std::size_t k = 1; k < block.size(); ++k) {
            if (labels_parallel(ref, graph.edges[block[k]].label))
                continue;
            AlignmentWitness w;
            w.first = graph.edges[block.front()].id;
            w.second = graph.edges[block[k]].id;
            for (std::size_t idx : cycle_through(graph, block.front(), block[k]))
                w.cycle.push_back(graph.edges[idx].id);
            v.holds = false;
            v.witness = std::move(w);
            return v;
        }
    }
    return v;
}

CriterionVerdict is_toric_additive(const LabelledGraph& graph) {
    RankWitness w;
    w.mu = betti_one(graph);
    for (std::size_t i = 1; i <= graph.num_params; ++i)
        w.generic_ranks.push_back(betti_one(contract_to(graph, i).graph));
    const std::size_t sum = std::accumulate(w.generic_ranks.begin(), w.generic_ranks.end(), std::size_t{0});
    const bool holds = w.mu == sum;

    const PurityReport report = purity_report(graph);
    if (report.is_isomorphism != holds)
        throw ConsistencyError("toric additivity: Betti count and purity map disagree");
    return {Criterion::toric_additive, holds, Witness{std::move(w)}};
}

CriterionVerdict is_disciplined(const LabelledGraph& graph) {
    require_valid(graph);
    for (const Edge& e : graph.edges)
        if (e.is_loop() && e.label.support_size() >= 2)
            return {Criterion::disciplined, false, Witness{EdgeWitness{e.id}}};
    return {Criterion::disciplined, true, std::nullopt};
}

CriterionVerdict is_regular_model(const LabelledGraph& graph) {
    require_valid(graph);
    for (const Edge& e : graph.edges)
        if (!e.label.is_unit())
            return {Criterion::regular, false, Witness{EdgeWitness{e.id}}};
    return {Criterion::regular, true, std::nullopt};
}

CriterionVerdict check(const LabelledGraph& graph, Criterion c) {
    switch (c) {
    case Criterion::toric_additive: return is_toric_additive(graph);
    case Criterion::aligned: return is_aligned(graph);
    case Criterion::disciplined: return is_disciplined(graph);
    case Criterion::regular: return is_regular_model(graph);
    }
    throw std::invalid_argument("unknown criterion");
}

std::vector<CriterionVerdict> check_all(const LabelledGraph& graph) {
    std::vector<CriterionVerdict> out;
    for (Criterion c : all_criteria)
        out.push_back(check(graph, c));
    const bool ta = out[0].holds, aligned = out[1].holds, disciplined = out[2].holds, regular = out[3].holds;
    if (ta && !aligned)
        throw ConsistencyError("toric-additive graph is not aligned");
    if (ta && !disciplined)
        throw ConsistencyError("toric-additive graph is not disciplined");
    if (regular && aligned != ta)
        throw ConsistencyError("regular graph where alignment and toric additivity differ");
    return out;
}

} // namespace neron
