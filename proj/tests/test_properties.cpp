// Invariants checked over seeded random graphs.

#include "neron/compgroup.hpp"
#include "neron/criteria.hpp"
#include "neron/errors.hpp"
#include "neron/graph_json.hpp"
#include "neron/oracle.hpp"
#include "neron/purity.hpp"
#include "neron/resolution.hpp"

#include <doctest.h>

#include <map>

using namespace neron;

namespace {

std::vector<LabelledGraph> corpus(oracle::ClassConstraint cls, std::size_t count, std::uint64_t base) {
    std::vector<LabelledGraph> out;
    for (std::uint64_t k = 0; k < count; ++k) {
        const std::uint64_t s = base + k;
        oracle::GeneratorConfig cfg;
        cfg.num_vertices = 1 + s % 6;
        cfg.num_edges = cfg.num_vertices - 1 + (s / 6) % 5;
        if (cfg.num_edges == 0)
            cfg.num_edges = 1;
        cfg.num_params = 1 + (s / 30) % 3;
        cfg.max_exponent = 1 + (s / 90) % 3;
        cfg.seed = s;
        cfg.class_constraint = cls;
        out.push_back(oracle::random_labelled_graph(cfg));
    }
    return out;
}

std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i))
                s.push_back(i + 1);
        out.push_back(s);
    }
    return out;
}

std::vector<std::size_t> generic_ranks(const LabelledGraph& g) {
    std::vector<std::size_t> r;
    for (std::size_t i = 1; i <= g.num_params; ++i)
        r.push_back(betti_one(contract_to(g, i).graph));
    return r;
}

// Collapses each resolution chain back to a single edge whose label is the
// sum of the chain labels, dropping the subdivision vertices.
LabelledGraph unsubdivide(const ResolutionOutput& r, std::size_t original_vertices) {
    LabelledGraph g;
    g.num_params = r.graph.num_params;
    g.vertices.assign(r.graph.vertices.begin(), r.graph.vertices.begin() + original_vertices);
    std::map<std::string, std::vector<std::size_t>> chains;
    std::vector<std::string> order;
    for (std::size_t k = 0; k < r.edge_trace.size(); ++k) {
        const auto& t = r.edge_trace[k];
        if (!chains.contains(t.old_edge))
            order.push_back(t.old_edge);
        chains[t.old_edge].push_back(k);
    }
    for (const auto& id : order) {
        const auto& ks = chains[id];
        std::vector<std::uint32_t> sum(g.num_params, 0);
        for (auto k : ks) {
            const auto& e = r.graph.edges[*r.graph.find_edge(r.edge_trace[k].new_edge)];
            for (std::size_t i = 0; i < sum.size(); ++i)
                sum[i] += e.label[i];
        }
        const auto& first = r.graph.edges[*r.graph.find_edge(r.edge_trace[ks.front()].new_edge)];
        const auto& last = r.graph.edges[*r.graph.find_edge(r.edge_trace[ks.back()].new_edge)];
        g.edges.push_back({id, first.tail, last.head, ExponentVector(std::move(sum))});
    }
    return g;
}

} // namespace

TEST_CASE("cycle basis spans the kernel and is saturated") {
    for (const auto& g : corpus(oracle::ClassConstraint::any, 300, 0)) {
        const auto basis = cycle_space_basis(g);
        CHECK(basis.size() == betti_one(g));
        const auto d = incidence_matrix(g);
        for (const auto& c : basis)
            for (const auto& x : d * c)
                CHECK(x == 0);
        CHECK(kernel_basis(d).size() == betti_one(g));
        if (!basis.empty()) {
            const auto b = IntMatrix::from_columns(g.edges.size(), basis);
            const auto inv = cokernel_invariants(b);
            CHECK(inv.torsion.empty());
            CHECK(inv.free_rank == g.edges.size() - basis.size());
        }
    }
}

TEST_CASE("contraction preserves genus, lowers Betti number, and composes") {
    for (const auto& g : corpus(oracle::ClassConstraint::any, 300, 1000)) {
        for (const auto& I : nonempty_subsets(g.num_params)) {
            const auto gi = contract(g, I).graph;
            CHECK(arithmetic_genus(gi) == arithmetic_genus(g));
            CHECK(betti_one(gi) <= betti_one(g));
            CHECK(validate(gi).empty());
            for (const auto& pos : nonempty_subsets(I.size())) {
                std::vector<std::size_t> J;
                for (auto p : pos)
                    J.push_back(I[p - 1]);
                CHECK(contract(gi, pos).graph == contract(g, J).graph);
            }
        }
        std::vector<std::size_t> all(g.num_params);
        for (std::size_t i = 0; i < all.size(); ++i)
            all[i] = i + 1;
        CHECK(contract(g, all).graph == g);
    }
}

TEST_CASE("purity map invariants") {
    for (const auto& g : corpus(oracle::ClassConstraint::any, 300, 2000)) {
        const auto rep = purity_report(g);
        const auto ranks = generic_ranks(g);
        std::size_t sum = 0;
        for (auto r : ranks)
            sum += r;
        CHECK(rep.domain_rank == betti_one(g));
        CHECK(rep.codomain_ranks == ranks);
        CHECK(rep.matrix.rows() == sum);
        CHECK(rep.injective);
        CHECK(rep.cokernel_torsion.empty());
        CHECK(rep.is_isomorphism == (sum == rep.domain_rank));
        CHECK(rep.is_isomorphism == is_toric_additive(g).holds);
    }
}

TEST_CASE("implications between the criteria") {
    for (auto cls : {oracle::ClassConstraint::any, oracle::ClassConstraint::regular,
                     oracle::ClassConstraint::disciplined}) {
        for (const auto& g : corpus(cls, 300, 3000)) {
            const auto v = check_all(g);
            const bool ta = v[0].holds, al = v[1].holds, di = v[2].holds, re = v[3].holds;
            if (ta) {
                CHECK(al);
                CHECK(di);
            }
            if (re)
                CHECK(al == ta);
            CHECK(al == oracle::aligned_bruteforce(g));
            if (ta)
                for (const auto& I : nonempty_subsets(g.num_params))
                    CHECK(is_toric_additive(contract(g, I).graph).holds);
        }
    }
}

TEST_CASE("resolution invariants") {
    for (const auto& g : corpus(oracle::ClassConstraint::disciplined, 300, 4000)) {
        const auto r = resolve(g);
        CHECK(validate(r.graph).empty());
        CHECK(is_regular_model(r.graph).holds);
        CHECK(arithmetic_genus(r.graph) == arithmetic_genus(g));
        CHECK(betti_one(r.graph) == betti_one(g));
        CHECK(generic_ranks(r.graph) == generic_ranks(g));
        CHECK(is_toric_additive(r.graph).holds == is_toric_additive(g).holds);
        CHECK(unsubdivide(r, g.vertices.size()) == g);
        for (std::size_t i = 1; i <= g.num_params; ++i)
            CHECK(component_group(r.graph, i).invariant_factors == component_group(g, i).invariant_factors);
        CHECK(resolve(r.graph).graph == r.graph);
    }
    for (const auto& g : corpus(oracle::ClassConstraint::any, 300, 5000)) {
        if (is_disciplined(g).holds)
            continue;
        CHECK_THROWS_AS(resolve(g), NotDisciplined);
    }
}

TEST_CASE("component group order equals the weighted spanning-tree count") {
    std::size_t compared = 0;
    for (const auto& g : corpus(oracle::ClassConstraint::any, 300, 6000)) {
        for (std::size_t i = 1; i <= g.num_params; ++i) {
            const auto cg = component_group(g, i);
            Integer product = 1;
            for (const auto& d : cg.invariant_factors)
                product *= d;
            CHECK(product == cg.order);
            if (contract_to(g, i).graph.edges.size() > oracle::max_tree_edges)
                continue;
            CHECK(cg.order == oracle::spanning_tree_order_oracle(g, i));
            ++compared;
        }
    }
    CHECK(compared > 300);
}

TEST_CASE("JSON round trip") {
    for (const auto& g : corpus(oracle::ClassConstraint::any, 200, 7000)) {
        const auto text = print_graph(g);
        const auto back = load_graph(text);
        CHECK(back == g);
        CHECK(print_graph(back) == text);
    }
}
